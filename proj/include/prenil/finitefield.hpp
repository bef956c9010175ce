#pragma once

// Small finite fields GF(p^k) with table-driven arithmetic, plus the extra
// structure used by the polygon calculus: a distinguished endomorphism sigma
// (a Tits endomorphism in characteristic 2: sigma(sigma(t)) = t^2) and an
// optional involution tau.
//
// Carriers stay tiny (q <= 64), so elements are byte indices into shared
// tables.  Index 0 is the zero element and, for extension fields, index i
// encodes the polynomial with base-p digits of i as coefficients.

#include <array>
#include <cassert>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace prenil {

class SmallField {
 public:
  // prime field Z/p
  static SmallField prime(int p) { return SmallField(p, {}); }
  // GF(p^k) from a monic irreducible modulus (low degree first, length k+1,
  // leading 1 implied by construction)
  static SmallField extension(int p, std::vector<int> modulus) {
    return SmallField(p, std::move(modulus));
  }

  // GF(8) = F2[x]/(x^3+x+1)
  static SmallField gf8() { return extension(2, {1, 1, 0, 1}); }
  // GF(4) = F2[x]/(x^2+x+1)
  static SmallField gf4() { return extension(2, {1, 1, 1}); }

  int characteristic() const { return p_; }
  int cardinality() const { return q_; }
  int degree() const { return k_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("SmallField::inv(0)");
    return inv_[a];
  }
  uint8_t pow(uint8_t a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    uint8_t r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  uint8_t of_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    // embed via repeated addition of 1
    uint8_t acc = 0;
    for (long i = 0; i < r; ++i) acc = add(acc, 1);
    return acc;
  }

  // distinguished endomorphism; defaults to the identity
  void set_sigma_power(long e) {
    sigma_.resize(q_);
    for (int a = 0; a < q_; ++a) sigma_[a] = pow(static_cast<uint8_t>(a), e);
  }
  void set_sigma_table(std::vector<uint8_t> table) {
    if (static_cast<int>(table.size()) != q_) throw std::invalid_argument("sigma table size");
    sigma_ = std::move(table);
  }
  uint8_t sigma(uint8_t a) const { return sigma_.empty() ? a : sigma_[a]; }
  bool has_sigma() const { return !sigma_.empty(); }

  void set_tau_table(std::vector<uint8_t> table) {
    if (static_cast<int>(table.size()) != q_) throw std::invalid_argument("tau table size");
    tau_ = std::move(table);
  }
  uint8_t tau(uint8_t a) const { return tau_.empty() ? a : tau_[a]; }

  // Tits property: sigma(sigma(t)) = t^2 for every t (exhaustive)
  bool sigma_is_tits() const {
    for (int a = 0; a < q_; ++a) {
      uint8_t t = static_cast<uint8_t>(a);
      if (sigma(sigma(t)) != mul(t, t)) return false;
    }
    return true;
  }
  // tau is an automorphism with tau(tau(t)) = t (exhaustive)
  bool tau_is_involution() const {
    for (int a = 0; a < q_; ++a) {
      uint8_t t = static_cast<uint8_t>(a);
      if (tau(tau(t)) != t) return false;
      for (int b = 0; b < q_; ++b) {
        uint8_t u = static_cast<uint8_t>(b);
        if (tau(add(t, u)) != add(tau(t), tau(u))) return false;
        if (tau(mul(t, u)) != mul(tau(t), tau(u))) return false;
      }
    }
    return true;
  }

  std::string name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

 private:
  SmallField(int p, std::vector<int> modulus) : p_(p) {
    if (p < 2) throw std::invalid_argument("SmallField: bad characteristic");
    k_ = modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1;
    q_ = 1;
    for (int i = 0; i < k_; ++i) q_ *= p_;
    if (q_ > 256) throw std::invalid_argument("SmallField: carrier too large");
    if (!modulus.empty() && modulus.back() != 1)
      throw std::invalid_argument("SmallField: modulus must be monic");
    build_tables(modulus);
    name_ = "F" + std::to_string(q_);
  }

  void build_tables(const std::vector<int>& modulus) {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    auto digits = [this](int a) {
      std::array<int, 8> d{};
      for (int i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
      }
      return d;
    };
    auto undigits = [this](const std::array<int, 8>& d) {
      int a = 0;
      for (int i = k_; i-- > 0;) a = a * p_ + d[i];
      return static_cast<uint8_t>(a);
    };
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::array<int, 8> dn{};
      for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = undigits(dn);
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::array<int, 8> ds{};
        for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = undigits(ds);
        // polynomial product reduced mod modulus
        std::array<int, 16> prod{};
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int d = 2 * k_ - 2; d >= k_; --d) {
          int c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (int i = 0; i < k_; ++i) {
            int idx = d - k_ + i;
            prod[idx] = ((prod[idx] - c * modulus[i]) % p_ + p_) % p_;
          }
        }
        std::array<int, 8> dp{};
        for (int i = 0; i < k_; ++i) dp[i] = prod[i];
        mul_[a * q_ + b] = undigits(dp);
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<uint8_t>(b);
    for (int a = 1; a < q_; ++a)
      if (inv_[a] == 0) throw std::invalid_argument("SmallField: modulus not irreducible");
  }

  int p_, k_, q_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, sigma_, tau_;
  std::string name_;
};

// Value handle into a SmallField.  The field must outlive its elements.
class Fq {
 public:
  Fq() : f_(nullptr), v_(0) {}
  Fq(const SmallField* f, uint8_t v) : f_(f), v_(v) {}

  const SmallField* field() const { return f_; }
  uint8_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fq operator+(Fq o) const { return Fq(f_, f_->add(v_, o.v_)); }
  Fq operator-(Fq o) const { return Fq(f_, f_->add(v_, f_->neg(o.v_))); }
  Fq operator*(Fq o) const { return Fq(f_, f_->mul(v_, o.v_)); }
  Fq operator-() const { return Fq(f_, f_->neg(v_)); }
  Fq inv() const { return Fq(f_, f_->inv(v_)); }
  Fq pow(long e) const { return Fq(f_, f_->pow(v_, e)); }
  bool operator==(Fq o) const { return v_ == o.v_; }
  bool operator!=(Fq o) const { return v_ != o.v_; }

  friend Fq sigma(Fq a) { return Fq(a.f_, a.f_->sigma(a.v_)); }
  friend Fq tau(Fq a) { return Fq(a.f_, a.f_->tau(a.v_)); }

  std::string str() const { return std::to_string(static_cast<int>(v_)); }

 private:
  const SmallField* f_;
  uint8_t v_;
};

// Convenience: the octagonal-set check from the defining property.
inline bool tits_sigma_check(const SmallField& f) { return f.sigma_is_tits(); }

}  // namespace prenil
