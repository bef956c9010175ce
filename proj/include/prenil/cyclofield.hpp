#pragma once

// Exact arithmetic in the real cyclotomic subfield Q(c), c = 2cos(pi/L).
// Elements are polynomials in c reduced modulo the minimal polynomial of c,
// with rational (GMP) coefficients.  The field houses every cos(k*pi/m) with
// m | L, so a single instance covers all angle values of a Coxeter type with
// bond labels m_st dividing L.
//
// Sign determination is exact: a nonzero reduced element p cannot vanish at c
// (deg p < deg minpoly), so interval evaluation of p over a shrinking rational
// isolating interval for c eventually excludes zero.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prenil {

namespace detail {

using QPoly = std::vector<mpq_class>;  // coefficients, low degree first

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  qp_trim(r);
  return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

// remainder of a modulo monic m
inline QPoly qp_rem(QPoly a, const QPoly& m) {
  assert(!m.empty() && m.back() == 1);
  qp_trim(a);
  const int dm = qp_deg(m);
  while (qp_deg(a) >= dm) {
    const int k = qp_deg(a) - dm;
    mpq_class lead = a.back();
    for (int i = 0; i <= dm; ++i) a[k + i] -= lead * m[i];
    qp_trim(a);
  }
  return a;
}

// exact quotient; requires m monic and m | a
inline QPoly qp_div_exact(QPoly a, const QPoly& m) {
  assert(!m.empty() && m.back() == 1);
  qp_trim(a);
  const int dm = qp_deg(m);
  if (qp_deg(a) < dm) {
    assert(a.empty());
    return {};
  }
  QPoly q(a.size() - m.size() + 1, mpq_class(0));
  while (qp_deg(a) >= dm) {
    const int k = qp_deg(a) - dm;
    mpq_class lead = a.back();
    q[k] = lead;
    for (int i = 0; i <= dm; ++i) a[k + i] -= lead * m[i];
    qp_trim(a);
  }
  assert(a.empty());
  return q;
}

inline QPoly qp_monic(QPoly p) {
  qp_trim(p);
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
  a = qp_monic(std::move(a));
  b = qp_monic(std::move(b));
  while (!b.empty()) {
    QPoly r = qp_monic(qp_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline QPoly qp_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = mpq_class(static_cast<long>(i)) * p[i];
  return d;
}

inline mpq_class qp_eval(const QPoly& p, const mpq_class& x) {
  mpq_class v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// certified enclosure of p over [lo, hi] by interval Horner
inline std::pair<mpq_class, mpq_class> qp_eval_interval(const QPoly& p, const mpq_class& lo,
                                                        const mpq_class& hi) {
  if (p.empty()) return {mpq_class(0), mpq_class(0)};
  mpq_class vlo = p.back(), vhi = p.back();
  for (size_t i = p.size() - 1; i-- > 0;) {
    mpq_class a = vlo * lo, b = vlo * hi, c = vhi * lo, d = vhi * hi;
    mpq_class mn = a, mx = a;
    for (const mpq_class* q : {&b, &c, &d}) {
      if (*q < mn) mn = *q;
      if (*q > mx) mx = *q;
    }
    vlo = mn + p[i];
    vhi = mx + p[i];
  }
  return {vlo, vhi};
}

// p_j with p_j(2cos t) = 2cos(j t); integer coefficients, p_0 = 2, p_1 = x.
inline QPoly two_cos_multiple(int j) {
  QPoly pm1 = {mpq_class(2)};
  if (j == 0) return pm1;
  QPoly p = {mpq_class(0), mpq_class(1)};
  for (int n = 1; n < j; ++n) {
    // p_{n+1} = x*p_n - p_{n-1}
    QPoly nxt(p.size() + 1, mpq_class(0));
    for (size_t i = 0; i < p.size(); ++i) nxt[i + 1] = p[i];
    for (size_t i = 0; i < pm1.size(); ++i) nxt[i] -= pm1[i];
    pm1 = std::move(p);
    p = std::move(nxt);
  }
  return p;
}

}  // namespace detail

class CycloField;

// An element of Q(2cos(pi/L)).  Immutable value type.
class CycloNum {
 public:
  CycloNum() : field_(nullptr) {}
  CycloNum(const CycloField* f, std::vector<mpq_class> coeffs)
      : field_(f), c_(std::move(coeffs)) {}

  const CycloField* field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }

  CycloNum operator-() const {
    std::vector<mpq_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return CycloNum(field_, std::move(r));
  }
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const { return *this + (-o); }
  CycloNum operator*(const CycloNum& o) const;
  CycloNum scaled(const mpq_class& q) const {
    std::vector<mpq_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * q;
    return CycloNum(field_, std::move(r));
  }
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  bool operator==(const CycloNum& o) const {
    assert(field_ == o.field_);
    return c_ == o.c_;
  }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  // -1, 0 or +1; exact
  int sign() const;

  double to_double() const;

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& q : c_) {
      size_t x = std::hash<double>{}(mpq_get_d(q.get_mpq_t()));
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i];
    }
    os << ']';
    return os.str();
  }

 private:
  const CycloField* field_;
  std::vector<mpq_class> c_;  // size = field degree
};

class CycloField {
 public:
  // Shared instance for a given L; instances live for the program duration.
  static const CycloField* get(int L) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(L);
    if (it == registry.end())
      it = registry.emplace(L, std::unique_ptr<CycloField>(new CycloField(L))).first;
    return it->second.get();
  }

  int L() const { return L_; }
  int degree() const { return deg_; }
  const detail::QPoly& minpoly() const { return minpoly_; }

  CycloNum zero() const { return from_rational(0); }
  CycloNum one() const { return from_rational(1); }
  CycloNum from_rational(const mpq_class& q) const {
    std::vector<mpq_class> c(deg_, mpq_class(0));
    c[0] = q;
    return CycloNum(this, std::move(c));
  }
  CycloNum from_poly(detail::QPoly p) const {
    p = detail::qp_rem(std::move(p), minpoly_);
    p.resize(deg_, mpq_class(0));
    return CycloNum(this, std::move(p));
  }

  // 2cos(k*pi/L) as an element
  CycloNum two_cos(long k) const {
    const long period = 2L * static_cast<long>(L_);
    k = ((k % period) + period) % period;
    if (k > L_) k = period - k;
    return CycloNum(this, cos_table_[static_cast<size_t>(k)]);
  }
  // cos(k*pi/m); requires m | L
  CycloNum cos_pi(long k, long m) const {
    if (m <= 0 || L_ % m != 0) throw std::invalid_argument("cos_pi: modulus does not divide L");
    return two_cos(k * (L_ / m)).scaled(mpq_class(1, 2));
  }
  // if x == cos(k*pi/L) for some 0 <= k <= L, return k
  std::optional<long> recognize_cos(const CycloNum& x) const {
    CycloNum d = x.scaled(2);
    for (long k = 0; k <= L_; ++k)
      if (d.coeffs() == cos_table_[static_cast<size_t>(k)]) return k;
    return std::nullopt;
  }

  friend class CycloNum;

 private:
  explicit CycloField(int L) : L_(L) {
    if (L < 1) throw std::invalid_argument("CycloField: L must be positive");
    minpoly_ = minimal_poly_two_cos(L);
    deg_ = detail::qp_deg(minpoly_);
    cos_table_.reserve(static_cast<size_t>(L_) + 1);
    for (long k = 0; k <= L_; ++k) {
      detail::QPoly p = detail::qp_rem(detail::two_cos_multiple(static_cast<int>(k)), minpoly_);
      p.resize(static_cast<size_t>(deg_), mpq_class(0));
      cos_table_.push_back(std::move(p));
    }
    init_interval();
  }

  // minimal polynomial of 2cos(pi/L), computed from the factorization of the
  // squarefree part of p_L + 2, whose roots are 2cos(m*pi/L) for odd m <= L
  static detail::QPoly minimal_poly_two_cos(int L) {
    using namespace detail;
    QPoly f = two_cos_multiple(L);
    if (f.empty()) f = {mpq_class(2)};
    f[0] += 2;
    f = qp_monic(f);
    // squarefree part
    QPoly g = qp_gcd(f, qp_derivative(f));
    QPoly s = g.empty() || qp_deg(g) == 0 ? f : qp_div_exact(f, g);
    // strip factors belonging to proper divisors L' of L with L/L' odd
    for (int Lp = 1; Lp < L; ++Lp) {
      if (L % Lp != 0) continue;
      if (((L / Lp) % 2) == 0) continue;
      QPoly m = minimal_poly_two_cos(Lp);
      s = qp_div_exact(s, m);
    }
    return s;
  }

  void init_interval() {
    using namespace detail;
    if (deg_ == 1) {
      // c is rational: minpoly = x - c
      iv_lo_ = -minpoly_[0];
      iv_hi_ = iv_lo_;
      return;
    }
    // scan down from 2 in steps of 1/16; the first sign change brackets the
    // largest root (root gaps of 2cos(k*pi/L) exceed 1/16 for L <= 24)
    const mpq_class step(1, 16);
    mpq_class hi(2);
    if (qp_eval(minpoly_, hi) <= 0) throw std::logic_error("CycloField: minpoly(2) <= 0");
    for (int k = 0; k < 128; ++k) {
      mpq_class lo = hi - step;
      if (qp_eval(minpoly_, lo) < 0) {
        iv_lo_ = lo;
        iv_hi_ = hi;
        return;
      }
      hi = lo;
    }
    throw std::logic_error("CycloField: failed to isolate largest root");
  }

  void interval(mpq_class& lo, mpq_class& hi) const {
    std::lock_guard<std::mutex> lock(iv_mu_);
    lo = iv_lo_;
    hi = iv_hi_;
  }

  // one bisection step toward c (largest root): minpoly < 0 left of c, > 0 right
  void refine(int steps) const {
    std::lock_guard<std::mutex> lock(iv_mu_);
    if (deg_ == 1) return;
    for (int i = 0; i < steps; ++i) {
      mpq_class mid = (iv_lo_ + iv_hi_) / 2;
      if (detail::qp_eval(minpoly_, mid) < 0)
        iv_lo_ = mid;
      else
        iv_hi_ = mid;
    }
  }

  int L_;
  int deg_;
  detail::QPoly minpoly_;
  std::vector<detail::QPoly> cos_table_;
  mutable std::mutex iv_mu_;
  mutable mpq_class iv_lo_, iv_hi_;
};

inline CycloNum CycloNum::operator+(const CycloNum& o) const {
  assert(field_ == o.field_ && field_);
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return CycloNum(field_, std::move(r));
}

inline CycloNum CycloNum::operator*(const CycloNum& o) const {
  assert(field_ == o.field_ && field_);
  return field_->from_poly(detail::qp_mul(c_, o.c_));
}

inline int CycloNum::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  mpq_class lo, hi;
  field_->interval(lo, hi);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [vlo, vhi] = detail::qp_eval_interval(c_, lo, hi);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    field_->refine(8);
    field_->interval(lo, hi);
  }
  throw std::logic_error("CycloNum::sign: interval refinement failed");
}

inline double CycloNum::to_double() const {
  if (is_rational()) return mpq_get_d(rational_part().get_mpq_t());
  mpq_class lo, hi;
  field_->interval(lo, hi);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [vlo, vhi] = detail::qp_eval_interval(c_, lo, hi);
    mpq_class gap = vhi - vlo, scale = abs(vhi) + abs(vlo) + 1;
    if (gap * mpq_class(1000000000000000L) < scale) {
      mpq_class mid = (vlo + vhi) / 2;
      return mpq_get_d(mid.get_mpq_t());
    }
    field_->refine(8);
    field_->interval(lo, hi);
  }
  throw std::logic_error("CycloNum::to_double: refinement failed");
}

}  // namespace prenil
