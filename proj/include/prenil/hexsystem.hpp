#pragma once

// Hexagonal coefficient structure of type (1/K): the rank-2 long-root data
// with norm N(v) = v^3, adjoint v^# = v^2 and trace form T(u, v) = 3uv over a
// commutative coefficient ring.  Satisfies T(T(v,w),k) = 9vwk.

namespace prenil {

template <class R>
struct Hex1K {
  explicit Hex1K(R one) : one_(one), three_(one + one + one) {}

  R N(const R& v) const { return v * v * v; }
  R sharp(const R& v) const { return v * v; }
  R T(const R& u, const R& v) const { return three_ * u * v; }

  const R& one() const { return one_; }

 private:
  R one_;
  R three_;
};

}  // namespace prenil
