#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "prenil/bipoly.hpp"
#include "prenil/cyclofield.hpp"
#include "prenil/finitefield.hpp"
#include "prenil/hexsystem.hpp"

using namespace prenil;

namespace {

CycloNum random_elem(const CycloField* F, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c;
  for (int i = 0; i < F->degree(); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(std::move(q));
  }
  return CycloNum(F, std::move(c));
}

}  // namespace

TEST_CASE("minimal polynomials of 2cos(pi/L) match the classical ones") {
  auto coeffs = [](const CycloField* F) {
    std::vector<long> v;
    for (const auto& q : F->minpoly()) {
      REQUIRE(q.get_den() == 1);
      v.push_back(q.get_num().get_si());
    }
    return v;
  };
  CHECK(coeffs(CycloField::get(2)) == std::vector<long>{0, 1});            // x
  CHECK(coeffs(CycloField::get(3)) == std::vector<long>{-1, 1});          // x - 1
  CHECK(coeffs(CycloField::get(4)) == std::vector<long>{-2, 0, 1});       // x^2 - 2
  CHECK(coeffs(CycloField::get(6)) == std::vector<long>{-3, 0, 1});       // x^2 - 3
  CHECK(coeffs(CycloField::get(8)) == std::vector<long>{2, 0, -4, 0, 1}); // x^4 - 4x^2 + 2
  CHECK(coeffs(CycloField::get(12)) == std::vector<long>{1, 0, -4, 0, 1});
  CHECK(coeffs(CycloField::get(24)) ==
        std::vector<long>{1, 0, -16, 0, 20, 0, -8, 0, 1});
}

TEST_CASE("cos values: fixed points") {
  const CycloField* F = CycloField::get(24);
  CHECK(F->cos_pi(1, 2) == F->zero());                       // cos(pi/2) = 0
  CHECK(F->cos_pi(1, 3) == F->from_rational(mpq_class(1, 2)));  // cos(pi/3) = 1/2
  CHECK(F->cos_pi(2, 3) == F->from_rational(mpq_class(-1, 2)));
  CHECK(F->cos_pi(0, 2) == F->one());
}

TEST_CASE("cos(pi/8)^2 equals (2+sqrt2)/4, built independently") {
  const CycloField* F = CycloField::get(8);
  CycloNum c8 = F->cos_pi(1, 8);
  // sqrt(2) = 2cos(pi/4), constructed via the multiple-angle table
  CycloNum sqrt2 = F->two_cos(2);
  CHECK(sqrt2 * sqrt2 == F->from_rational(2));
  CycloNum rhs = (F->from_rational(2) + sqrt2).scaled(mpq_class(1, 4));
  CHECK(c8 * c8 == rhs);
  CHECK(c8.sign() == 1);
}

TEST_CASE("cos recognition round trip and failure signal") {
  const CycloField* F = CycloField::get(24);
  for (long k = 0; k <= 24; ++k) {
    auto r = F->recognize_cos(F->cos_pi(k, 24));
    REQUIRE(r.has_value());
    CHECK(*r == k);
  }
  CHECK(!F->recognize_cos(F->from_rational(mpq_class(1, 3))).has_value());
  CHECK(!F->recognize_cos(F->two_cos(1)).has_value());  // 2cos(pi/24) is not a cosine value
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937 rng(7);
  for (int L : {8, 12, 24}) {
    const CycloField* F = CycloField::get(L);
    for (int it = 0; it < 40; ++it) {
      CycloNum a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == F->zero());
    }
  }
}

TEST_CASE("sign agrees with numeric evaluation; equality consistent to 1e-12") {
  std::mt19937 rng(11);
  const CycloField* F = CycloField::get(24);
  const double c = 2.0 * std::cos(M_PI / 24.0);
  for (int it = 0; it < 200; ++it) {
    CycloNum a = random_elem(F, rng);
    double v = 0;
    for (size_t i = a.coeffs().size(); i-- > 0;)
      v = v * c + mpq_get_d(a.coeffs()[i].get_mpq_t());
    if (std::fabs(v) > 1e-9) CHECK(a.sign() == (v > 0 ? 1 : -1));
    CHECK(std::fabs(a.to_double() - v) < 1e-12 * (1 + std::fabs(v)));
    CycloNum b = random_elem(F, rng);
    if (a == b) CHECK(std::fabs(a.to_double() - b.to_double()) < 1e-12);
  }
  CHECK(F->zero().sign() == 0);
  CHECK((F->two_cos(1) - F->two_cos(1)).sign() == 0);
}

TEST_CASE("tits sigma check on small carriers") {
  SmallField f2 = SmallField::prime(2);  // sigma defaults to identity
  CHECK(tits_sigma_check(f2));           // t^2 = t on F2

  SmallField f8 = SmallField::gf8();
  f8.set_sigma_power(4);
  CHECK(tits_sigma_check(f8));  // sigma^2 = t^16 = t^2

  SmallField f4 = SmallField::gf4();
  f4.set_sigma_power(2);
  CHECK(!tits_sigma_check(f4));  // sigma^2 = t^4 = t != t^2 for a generator

  SmallField f5 = SmallField::prime(5);
  CHECK(!tits_sigma_check(f5));  // odd characteristic, identity is not Tits
}

TEST_CASE("GF(8) and GF(4) table sanity") {
  SmallField f8 = SmallField::gf8();
  CHECK(f8.cardinality() == 8);
  // x^3 = x + 1 in F2[x]/(x^3+x+1): index 2 is x, so 2*2*2 == 3
  CHECK(f8.mul(f8.mul(2, 2), 2) == 3);
  for (int a = 1; a < 8; ++a) CHECK(f8.mul(a, f8.inv(a)) == 1);
  // multiplicative order of x divides 7 and is not 1
  uint8_t p = 2;
  int ord = 1;
  while (p != 1) {
    p = f8.mul(p, 2);
    ++ord;
  }
  CHECK(ord == 7);
}

TEST_CASE("bivariate ring over F8: sigma is a ring endomorphism with sigma^2 = squaring") {
  SmallField f8 = SmallField::gf8();
  f8.set_sigma_power(4);
  BiRing ring(&f8);
  std::mt19937 rng(23);
  auto rnd = [&]() { return ring.random(rng, 3, 2); };
  for (int it = 0; it < 200; ++it) {
    BiPoly a = rnd(), b = rnd();
    CHECK(sigma(a * b) == sigma(a) * sigma(b));
    CHECK(sigma(a + b) == sigma(a) + sigma(b));
    CHECK(sigma(sigma(a)) == a * a);
    CHECK(tau(tau(a)) == a);
    CHECK(tau(a * b) == tau(a) * tau(b));
    BiPoly c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  // sigma on the generators: a -> b, b -> a^2
  CHECK(sigma(ring.a()) == ring.b());
  CHECK(sigma(ring.b()) == ring.a() * ring.a());
  CHECK(tau(ring.a()) == ring.b());
  CHECK(tau(ring.b()) == ring.a());
}

TEST_CASE("hexagonal structure of type (1/K): T(T(v,w),k) = 9vwk") {
  for (int p : {5, 7, 3}) {
    SmallField f = SmallField::prime(p);
    Hex1K<Fq> hex(Fq(&f, 1));
    for (int v = 0; v < p; ++v)
      for (int w = 0; w < p; ++w)
        for (int k = 0; k < p; ++k) {
          Fq fv(&f, f.of_int(v)), fw(&f, f.of_int(w)), fk(&f, f.of_int(k));
          Fq lhs = hex.T(hex.T(fv, fw), fk);
          Fq rhs = Fq(&f, f.of_int(9L * v * w * k));
          CHECK(lhs == rhs);
        }
  }
  // frozen examples: modular arithmetic oracle
  SmallField f5 = SmallField::prime(5);
  Hex1K<Fq> hex5(Fq(&f5, 1));
  Fq one(&f5, 1), zero(&f5, 0);
  CHECK(hex5.T(hex5.T(one, one), one) == Fq(&f5, 4));  // 9 mod 5
  CHECK(hex5.N(zero) == zero);
  CHECK(hex5.sharp(zero) == zero);
  SmallField f3 = SmallField::prime(3);
  Hex1K<Fq> hex3(Fq(&f3, 1));
  Fq one3(&f3, 1);
  CHECK(hex3.T(hex3.T(one3, one3), one3) == Fq(&f3, 0));  // 9 = 0 mod 3
}
