#pragma once

// The polynomial ring F[a, b] over a small finite field, carrying the twisted
// endomorphism used with octagonal coefficient data:
//
//   sigma(c a^i b^j) = sigma_F(c) a^(2j) b^i      (a -> b, b -> a^2)
//   tau(c a^i b^j)   = c a^j b^i                  (a <-> b, coefficients fixed)
//
// With sigma_F a Tits endomorphism of F (char 2), sigma is a ring
// endomorphism whose square is the squaring map on every element.

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "prenil/finitefield.hpp"

namespace prenil {

class BiPoly {
 public:
  using Key = std::pair<int, int>;  // exponents of a and b

  BiPoly() : f_(nullptr) {}
  explicit BiPoly(const SmallField* f) : f_(f) {}

  const SmallField* field() const { return f_; }
  bool is_zero() const { return terms_.empty(); }

  static BiPoly monomial(const SmallField* f, uint8_t c, int i, int j) {
    BiPoly p(f);
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
  }

  BiPoly operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r(f_);
    for (const auto& [k, c] : terms_) r.terms_[k] = f_->neg(c);
    return r;
  }
  BiPoly operator-(const BiPoly& o) const { return *this + (-o); }
  BiPoly operator*(const BiPoly& o) const {
    BiPoly r(f_ ? f_ : o.f_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, f_->mul(ca, cb));
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }

  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  friend BiPoly sigma(const BiPoly& p) {
    BiPoly r(p.f_);
    for (const auto& [k, c] : p.terms_) r.add_term({2 * k.second, k.first}, p.f_->sigma(c));
    return r;
  }
  friend BiPoly tau(const BiPoly& p) {
    BiPoly r(p.f_);
    for (const auto& [k, c] : p.terms_) r.add_term({k.second, k.first}, c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      bool coeff = c != 1 || (k.first == 0 && k.second == 0);
      if (coeff) os << static_cast<int>(c);
      bool star = coeff;
      if (k.first > 0) {
        if (star) os << "*";
        os << "a";
        if (k.first > 1) os << "^" << k.first;
        star = true;
      }
      if (k.second > 0) {
        if (star) os << "*";
        os << "b";
        if (k.second > 1) os << "^" << k.second;
      }
    }
    return os.str();
  }

 private:
  void add_term(Key k, uint8_t c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    uint8_t s = f_->add(it->second, c);
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }

  const SmallField* f_;
  std::map<Key, uint8_t> terms_;
};

// element factory for one base field
class BiRing {
 public:
  explicit BiRing(const SmallField* f) : f_(f) {}

  const SmallField* base() const { return f_; }
  BiPoly zero() const { return BiPoly(f_); }
  BiPoly one() const { return BiPoly::monomial(f_, 1, 0, 0); }
  BiPoly constant(uint8_t c) const { return BiPoly::monomial(f_, c, 0, 0); }
  BiPoly a() const { return BiPoly::monomial(f_, 1, 1, 0); }
  BiPoly b() const { return BiPoly::monomial(f_, 1, 0, 1); }
  BiPoly monomial(uint8_t c, int i, int j) const { return BiPoly::monomial(f_, c, i, j); }

  BiPoly random(std::mt19937& rng, int max_deg, int terms) const {
    std::uniform_int_distribution<int> e(0, max_deg), c(0, f_->cardinality() - 1);
    BiPoly p(f_);
    for (int t = 0; t < terms; ++t)
      p += BiPoly::monomial(f_, static_cast<uint8_t>(c(rng)), e(rng), e(rng));
    return p;
  }

 private:
  const SmallField* f_;
};

}  // namespace prenil
