#pragma once

// Roots as half-spaces of the chamber set W: enumeration, prenilpotent pair
// classification, intervals [alpha, beta] and (alpha, beta), and the wall
// crossing sequence of a minimal gallery.
//
// Classification is by the value trichotomy of B(v_alpha, v_beta):
//   |B| < 1   finite dihedral pair, B = -cos(k pi / m) in lowest terms,
//             o(r_alpha r_beta) = m
//   B >= 1    nested pair (prenilpotent, infinite product order)
//   B <= -1   opposite-facing parallel pair, not prenilpotent
// The definitional chamber-set oracle validates this in the test suite.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "prenil/coxeter.hpp"

namespace prenil {

enum class PairKind : uint8_t {
  Equal,
  Opposite,
  FiniteDihedral,
  NestedProper,
  NonPrenilpotentParallel,
};

struct PairClass {
  PairKind kind;
  // FiniteDihedral only: B(v_a, v_b) = -cos(num pi / den), gcd(num, den) = 1;
  // the product order o(r_a r_b) equals den
  long num = 0;
  long den = 0;
  // NestedProper only: alpha strictly inside beta?
  bool a_inside_b = false;

  bool finite() const { return kind == PairKind::FiniteDihedral; }
  long order() const { return finite() ? den : 0; }
  // numerator 1 means the two roots bound a dihedral fundamental cone
  bool cone_is_fundamental() const { return finite() && num == 1; }
};

struct Root {
  Vec v;
  bool positive = true;
  std::vector<uint8_t> word;  // v = w(e_gen) for w = this word
  int gen = 0;
  int depth = 0;

  Root negated() const {
    Root r = *this;
    for (auto& c : r.v) c = -c;
    r.positive = !positive;
    return r;
  }
};

inline size_t vec_hash(const Vec& v) {
  size_t h = 14695981039346656037ull;
  for (const auto& x : v) h = (h ^ x.hash()) * 1099511628211ull;
  return h;
}

// all roots w(e_s) with l(w) <= depth, deduplicated by vector and closed
// under negation; deterministic order
class RootSet {
 public:
  RootSet(const CoxeterSystem& sys, int depth) : sys_(&sys), depth_(depth) {
    auto elems = sys.enumerate(depth);
    for (const auto& w : elems)
      for (int s = 0; s < sys.rank(); ++s) {
        Root r;
        r.v = w.mat * sys.simple_root(s);
        if (find(r.v)) continue;
        r.positive = sys.root_vector_sign(r.v) > 0;
        r.word = w.word;
        r.gen = s;
        r.depth = w.length();
        insert(std::move(r));
      }
    // close under negation
    size_t n = roots_.size();
    for (size_t i = 0; i < n; ++i) {
      Root neg = roots_[i].negated();
      if (!find(neg.v)) {
        neg.word = roots_[i].word;
        neg.gen = roots_[i].gen;
        insert(std::move(neg));
      }
    }
  }

  const CoxeterSystem& system() const { return *sys_; }
  int depth() const { return depth_; }
  size_t size() const { return roots_.size(); }
  const Root& operator[](size_t i) const { return roots_[i]; }

  std::optional<size_t> find(const Vec& v) const {
    auto it = index_.find(vec_hash(v));
    if (it == index_.end()) return std::nullopt;
    for (size_t i : it->second)
      if (roots_[i].v == v) return i;
    return std::nullopt;
  }
  size_t negation_of(size_t i) const {
    Vec n = roots_[i].v;
    for (auto& c : n) c = -c;
    auto r = find(n);
    if (!r) throw std::logic_error("RootSet: negation missing");
    return *r;
  }

 private:
  void insert(Root r) {
    index_[vec_hash(r.v)].push_back(roots_.size());
    roots_.push_back(std::move(r));
  }

  const CoxeterSystem* sys_;
  int depth_;
  std::vector<Root> roots_;
  std::unordered_map<size_t, std::vector<size_t>> index_;
};

namespace detail_roots {

// first chamber (in BFS order from the identity) lying in exactly one of the
// two half-spaces; exists whenever the roots differ
inline GroupElement symmetric_difference_chamber(const CoxeterSystem& sys, const Vec& va,
                                                 const Vec& vb) {
  std::vector<GroupElement> store{sys.identity()};
  std::unordered_map<size_t, std::vector<size_t>> seen{{store[0].hash(), {0}}};
  size_t lo = 0;
  for (int d = 0; d < 64; ++d) {
    size_t hi = store.size();
    for (size_t k = lo; k < hi; ++k) {
      if (sys.member(store[k], va) != sys.member(store[k], vb)) return store[k];
      for (int s = 0; s < sys.rank(); ++s) {
        GroupElement n = sys.multiply(store[k], sys.generator(s));
        size_t h = n.hash();
        auto it = seen.find(h);
        bool dup = false;
        if (it != seen.end())
          for (size_t i : it->second)
            if (store[i] == n) dup = true;
        if (!dup) {
          seen[h].push_back(store.size());
          store.push_back(std::move(n));
        }
      }
    }
    lo = hi;
  }
  throw std::logic_error("symmetric_difference_chamber: search exhausted");
}

}  // namespace detail_roots

inline PairClass classify_pair(const CoxeterSystem& sys, const Vec& va, const Vec& vb) {
  PairClass pc{PairKind::Equal};
  if (va == vb) return pc;
  {
    Vec nb = vb;
    for (auto& c : nb) c = -c;
    if (va == nb) {
      pc.kind = PairKind::Opposite;
      return pc;
    }
  }
  CycloNum b = sys.bform(va, vb);
  const CycloField* F = sys.field();
  int cmp_hi = (b - F->one()).sign();    // b vs 1
  int cmp_lo = (b + F->one()).sign();    // b vs -1
  if (cmp_hi < 0 && cmp_lo > 0) {
    pc.kind = PairKind::FiniteDihedral;
    auto k = F->recognize_cos(-b);  // b = -cos(k pi / L)
    if (!k || *k == 0 || *k == F->L())
      throw std::logic_error("classify_pair: finite pair with unrecognized angle");
    long g = std::gcd(*k, static_cast<long>(F->L()));
    pc.num = *k / g;
    pc.den = F->L() / g;
    return pc;
  }
  if (cmp_hi >= 0) {
    pc.kind = PairKind::NestedProper;
    GroupElement w = detail_roots::symmetric_difference_chamber(sys, va, vb);
    // the witness chamber lies in the larger root only
    pc.a_inside_b = sys.member(w, vb);
    return pc;
  }
  pc.kind = PairKind::NonPrenilpotentParallel;
  return pc;
}

// the rank-2 root subsystem of <r_alpha, r_beta> for a finite pair:
// the orbit of {v_alpha, v_beta} under the two reflections (2 * order vectors)
inline std::vector<Vec> dihedral_subsystem(const CoxeterSystem& sys, const Vec& va,
                                           const Vec& vb) {
  std::vector<Vec> out{va, vb};
  auto known = [&](const Vec& v) {
    for (const auto& u : out)
      if (u == v) return true;
    return false;
  };
  size_t lo = 0;
  while (lo < out.size()) {
    size_t hi = out.size();
    if (out.size() > 64) throw std::logic_error("dihedral_subsystem: runaway closure");
    for (size_t k = lo; k < hi; ++k) {
      for (const Vec* mirror : {&va, &vb}) {
        Vec r = sys.reflect_in(*mirror, out[k]);
        if (!known(r)) out.push_back(std::move(r));
      }
      Vec n = out[k];
      for (auto& c : n) c = -c;
      if (!known(n)) out.push_back(std::move(n));
    }
    lo = hi;
  }
  return out;
}

// gamma in the closed cone spanned by v_alpha, v_beta (gamma known to lie in
// their span); sign tests only, via the 2x2 Gram system with determinant
// 1 - B(a,b)^2 > 0
inline bool in_cone(const CoxeterSystem& sys, const Vec& va, const Vec& vb, const Vec& vg) {
  CycloNum bab = sys.bform(va, vb);
  CycloNum ga = sys.bform(vg, va), gb = sys.bform(vg, vb);
  CycloNum ca = ga - bab * gb;  // proportional to the v_alpha coefficient
  CycloNum cb = gb - bab * ga;
  return ca.sign() >= 0 && cb.sign() >= 0;
}

// closed interval [alpha, beta] of a finite dihedral pair, as root vectors;
// first two entries are v_alpha, v_beta
inline std::vector<Vec> interval_closed(const CoxeterSystem& sys, const Vec& va, const Vec& vb) {
  std::vector<Vec> out;
  for (const Vec& g : dihedral_subsystem(sys, va, vb))
    if (in_cone(sys, va, vb, g)) out.push_back(g);
  // canonical order: v_alpha, v_beta, then the rest in generation order
  std::vector<Vec> ordered;
  ordered.push_back(va);
  if (!(vb == va)) ordered.push_back(vb);
  for (auto& g : out)
    if (!(g == va) && !(g == vb)) ordered.push_back(std::move(g));
  return ordered;
}

// open interval (alpha, beta) = [alpha, beta] \ {alpha, beta}
inline std::vector<Vec> interval_open(const CoxeterSystem& sys, const Vec& va, const Vec& vb) {
  std::vector<Vec> cl = interval_closed(sys, va, vb);
  return {cl.begin() + 2, cl.end()};
}

// membership predicate for [alpha, beta], also valid for nested pairs, where
// the interval is {gamma : alpha <= gamma <= beta} and may be infinite
inline bool interval_contains(const CoxeterSystem& sys, const PairClass& pc, const Vec& va,
                              const Vec& vb, const Vec& vg) {
  if (pc.kind == PairKind::FiniteDihedral) {
    for (const Vec& u : interval_closed(sys, va, vb))
      if (u == vg) return true;
    return false;
  }
  if (pc.kind != PairKind::NestedProper)
    throw std::invalid_argument("interval_contains: pair is not prenilpotent");
  const Vec& lo = pc.a_inside_b ? va : vb;
  const Vec& hi = pc.a_inside_b ? vb : va;
  if (vg == lo || vg == hi) return true;
  PairClass pl = classify_pair(sys, lo, vg);
  if (!(pl.kind == PairKind::NestedProper && pl.a_inside_b)) return false;
  PairClass ph = classify_pair(sys, vg, hi);
  return ph.kind == PairKind::NestedProper && ph.a_inside_b;
}

// roots crossed by the standard minimal gallery of w: alpha_i =
// s_1 ... s_{i-1} (e_{s_i}) for the ShortLex word s_1 ... s_k
inline std::vector<Vec> crossing_sequence(const CoxeterSystem& sys, const GroupElement& w) {
  std::vector<Vec> out;
  GroupElement prefix = sys.identity();
  for (uint8_t s : w.word) {
    out.push_back(prefix.mat * sys.simple_root(s));
    prefix = sys.multiply(prefix, sys.generator(s));
  }
  return out;
}

}  // namespace prenil
