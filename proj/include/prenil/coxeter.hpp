#pragma once

// Coxeter systems of rank 2 and 3 with all bond labels in {2,3,4,6,8}, their
// chamber systems, galleries, residues and projections.
//
// Group elements carry the exact matrix of the standard geometric
// representation over Q(2cos(pi/L)), L = lcm of the bond labels, together
// with a canonical (ShortLex-least) reduced word recomputed from the matrix
// by greedy left-descent extraction.  Element identity is matrix identity,
// so the word problem is delegated to exact linear algebra.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "prenil/cyclofield.hpp"

namespace prenil {

using Vec = std::vector<CycloNum>;

struct Mat {
  int n = 0;
  std::vector<CycloNum> a;  // row-major

  static Mat identity(const CycloField* F, int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, F->zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
    return m;
  }
  CycloNum& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const CycloNum& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool operator==(const Mat& o) const { return a == o.a; }

  Mat operator*(const Mat& o) const {
    Mat r;
    r.n = n;
    r.a.reserve(a.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CycloNum s = at(i, 0) * o.at(0, j);
        for (int k = 1; k < n; ++k) s += at(i, k) * o.at(k, j);
        r.a.push_back(std::move(s));
      }
    return r;
  }
  Vec operator*(const Vec& v) const {
    Vec r;
    r.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      CycloNum s = at(i, 0) * v[0];
      for (int k = 1; k < n; ++k) s += at(i, k) * v[k];
      r.push_back(std::move(s));
    }
    return r;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& x : a) h = (h ^ x.hash()) * 1099511628211ull;
    return h;
  }
};

enum class TypeFamily { spherical, affine, hyperbolic };

struct CoxeterType {
  int rank = 0;
  std::array<std::array<int, 3>, 3> m{};  // Coxeter matrix, m[i][i] = 1
  TypeFamily family = TypeFamily::spherical;
  bool cyclic = false;        // complete diagram: every off-diagonal label >= 3
  bool simply_laced = false;  // labels in {2,3}

  static bool label_ok(int v) { return v == 2 || v == 3 || v == 4 || v == 6 || v == 8; }

  static CoxeterType rank2(int m01) {
    CoxeterType t;
    t.rank = 2;
    if (!label_ok(m01)) throw std::invalid_argument("bond label must be in {2,3,4,6,8}");
    t.m[0][0] = t.m[1][1] = 1;
    t.m[0][1] = t.m[1][0] = m01;
    t.family = TypeFamily::spherical;
    t.cyclic = m01 >= 3;
    t.simply_laced = m01 <= 3;
    return t;
  }
  // labels (m_01, m_02, m_12)
  static CoxeterType rank3(int m01, int m02, int m12) {
    CoxeterType t;
    t.rank = 3;
    for (int v : {m01, m02, m12})
      if (!label_ok(v)) throw std::invalid_argument("bond label must be in {2,3,4,6,8}");
    t.m[0][0] = t.m[1][1] = t.m[2][2] = 1;
    t.m[0][1] = t.m[1][0] = m01;
    t.m[0][2] = t.m[2][0] = m02;
    t.m[1][2] = t.m[2][1] = m12;
    // affine iff 1/m01 + 1/m02 + 1/m12 = 1
    long num = static_cast<long>(m02) * m12 + static_cast<long>(m01) * m12 +
               static_cast<long>(m01) * m02;
    long den = static_cast<long>(m01) * m02 * m12;
    t.family = num == den  ? TypeFamily::affine
               : num > den ? TypeFamily::spherical
                           : TypeFamily::hyperbolic;
    t.cyclic = m01 >= 3 && m02 >= 3 && m12 >= 3;
    t.simply_laced = m01 <= 3 && m02 <= 3 && m12 <= 3;
    return t;
  }

  int lcm_labels() const {
    int l = 1;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j) l = static_cast<int>(std::lcm(l, m[i][j]));
    return l;
  }
  std::string str() const {
    if (rank == 2) return std::to_string(m[0][1]);
    return std::to_string(m[0][1]) + "," + std::to_string(m[0][2]) + "," +
           std::to_string(m[1][2]);
  }
};

class CoxeterSystem;

// w in W with exact matrix, exact inverse matrix, and the ShortLex-least
// reduced word.  Immutable after construction.
struct GroupElement {
  Mat mat;
  Mat inv;
  std::vector<uint8_t> word;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }
  bool operator==(const GroupElement& o) const { return mat == o.mat; }
  size_t hash() const { return mat.hash(); }
};

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterType t) : type_(t) {
    F_ = CycloField::get(t.lcm_labels());
    n_ = t.rank;
    // bilinear form B(e_i, e_j) = -cos(pi / m_ij)
    b_.assign(static_cast<size_t>(n_) * n_, F_->zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        b_[static_cast<size_t>(i) * n_ + j] =
            i == j ? F_->one() : -F_->cos_pi(1, t.m[i][j]);
    for (int i = 0; i < n_; ++i) gens_.push_back(make_gen_matrix(i));
    init_interior_point();
  }

  const CoxeterType& type() const { return type_; }
  const CycloField* field() const { return F_; }
  int rank() const { return n_; }

  const CycloNum& b_entry(int i, int j) const { return b_[static_cast<size_t>(i) * n_ + j]; }

  CycloNum bform(const Vec& u, const Vec& v) const {
    CycloNum s = F_->zero();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += u[i] * b_entry(i, j) * v[j];
    return s;
  }

  Vec simple_root(int i) const {
    Vec v(static_cast<size_t>(n_), F_->zero());
    v[i] = F_->one();
    return v;
  }

  Vec reflect(int i, const Vec& v) const {
    // v - 2 B(e_i, v) e_i
    CycloNum c = F_->zero();
    for (int j = 0; j < n_; ++j) c += b_entry(i, j) * v[j];
    Vec r = v;
    r[i] = r[i] - c.scaled(2);
    return r;
  }
  // reflection in an arbitrary unit vector u
  Vec reflect_in(const Vec& u, const Vec& v) const {
    CycloNum c = bform(u, v).scaled(2);
    Vec r = v;
    for (int i = 0; i < n_; ++i) r[i] = r[i] - c * u[i];
    return r;
  }

  // -1: negative vector, +1: positive, 0: zero/mixed (not a root direction)
  int root_vector_sign(const Vec& v) const {
    bool pos = false, neg = false;
    for (const auto& x : v) {
      int s = x.sign();
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && !neg) return 1;
    if (neg && !pos) return -1;
    return 0;
  }

  GroupElement identity() const {
    GroupElement e;
    e.mat = Mat::identity(F_, n_);
    e.inv = e.mat;
    return e;
  }
  GroupElement generator(int i) const {
    GroupElement g;
    g.mat = gens_[i];
    g.inv = gens_[i];
    g.word = {static_cast<uint8_t>(i)};
    return g;
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement r;
    r.mat = a.mat * b.mat;
    r.inv = b.inv * a.inv;
    r.word = recompute_word(r.mat, r.inv);
    return r;
  }
  GroupElement inverse(const GroupElement& a) const {
    GroupElement r;
    r.mat = a.inv;
    r.inv = a.mat;
    r.word = recompute_word(r.mat, r.inv);
    return r;
  }
  GroupElement from_word(const std::vector<uint8_t>& w) const {
    GroupElement g = identity();
    for (uint8_t s : w) g = multiply(g, generator(s));
    return g;
  }

  // s such that l(s w) < l(w)
  std::vector<int> left_descents(const GroupElement& w) const {
    std::vector<int> d;
    for (int i = 0; i < n_; ++i)
      if (column_sign(w.inv, i) < 0) d.push_back(i);
    return d;
  }
  std::vector<int> right_descents(const GroupElement& w) const {
    std::vector<int> d;
    for (int i = 0; i < n_; ++i)
      if (column_sign(w.mat, i) < 0) d.push_back(i);
    return d;
  }

  int distance(const GroupElement& x, const GroupElement& y) const {
    return multiply(inverse(x), y).length();
  }

  // chamber membership: w is in the half-space of root vector v iff
  // w^{-1}(v) is a positive vector
  bool member(const GroupElement& w, const Vec& v) const {
    Vec u = w.inv * v;
    int s = root_vector_sign(u);
    assert(s != 0);
    return s > 0;
  }

  // all elements of length <= depth, in deterministic BFS order
  std::vector<GroupElement> enumerate(int depth) const {
    std::vector<GroupElement> out;
    std::unordered_map<size_t, std::vector<size_t>> seen;
    auto lookup = [&](const GroupElement& g) -> bool {
      auto it = seen.find(g.hash());
      if (it == seen.end()) return false;
      for (size_t idx : it->second)
        if (out[idx] == g) return true;
      return false;
    };
    auto insert = [&](GroupElement g) {
      seen[g.hash()].push_back(out.size());
      out.push_back(std::move(g));
    };
    insert(identity());
    size_t lo = 0;
    for (int len = 0; len < depth; ++len) {
      size_t hi = out.size();
      for (size_t k = lo; k < hi; ++k) {
        for (int s = 0; s < n_; ++s) {
          if (column_sign(out[k].mat, s) < 0) continue;  // length would drop
          GroupElement child = multiply(out[k], generator(s));
          assert(child.length() == len + 1);
          if (!lookup(child)) insert(std::move(child));
        }
      }
      lo = hi;
    }
    return out;
  }

  // interior chamber point; defined when B is nondegenerate
  const std::optional<Vec>& interior_point() const { return x0_; }

  Vec chamber_point(const GroupElement& w) const {
    if (!x0_) throw std::logic_error("chamber_point: degenerate form");
    return w.mat * *x0_;
  }

  std::string letters() const { return n_ == 2 ? "st" : "rst"; }
  std::string word_str(const std::vector<uint8_t>& w) const {
    std::string s;
    const std::string l = letters();
    for (uint8_t c : w) s += l[c];
    return s.empty() ? "1" : s;
  }

 private:
  Mat make_gen_matrix(int i) const {
    Mat s = Mat::identity(F_, n_);
    for (int j = 0; j < n_; ++j) s.at(i, j) = s.at(i, j) - b_entry(i, j).scaled(2);
    return s;
  }

  // sign of the column vector (as a root vector)
  int column_sign(const Mat& m, int j) const {
    bool pos = false, neg = false;
    for (int i = 0; i < n_; ++i) {
      int s = m.at(i, j).sign();
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    assert(!(pos && neg));
    return pos ? 1 : neg ? -1 : 0;
  }

  // greedy smallest-left-descent extraction: the ShortLex-least reduced word
  std::vector<uint8_t> recompute_word(Mat m, Mat minv) const {
    std::vector<uint8_t> w;
    const Mat id = Mat::identity(F_, n_);
    int guard = 0;
    while (!(m == id)) {
      if (++guard > 4096) throw std::logic_error("recompute_word: no convergence");
      int d = -1;
      for (int i = 0; i < n_; ++i)
        if (column_sign(minv, i) < 0) {
          d = i;
          break;
        }
      if (d < 0) throw std::logic_error("recompute_word: no descent for non-identity");
      w.push_back(static_cast<uint8_t>(d));
      m = gens_[d] * m;
      minv = minv * gens_[d];
    }
    return w;
  }

  void init_interior_point() {
    // x0 = sign(det B) * adj(B) * ones: positive multiple of the weight sum
    // when B is invertible
    if (n_ == 2) {
      const CycloNum& b01 = b_entry(0, 1);
      CycloNum det = F_->one() - b01 * b01;
      if (det.sign() == 0) return;
      Vec x(2, F_->zero());
      x[0] = F_->one() - b01;
      x[1] = F_->one() - b01;
      int s = det.sign();
      if (s < 0)
        for (auto& c : x) c = -c;
      x0_ = std::move(x);
      return;
    }
    auto B = [&](int i, int j) -> const CycloNum& { return b_entry(i, j); };
    auto minor = [&](int r, int c) {
      int r0 = r == 0 ? 1 : 0, r1 = r == 2 ? 1 : 2;
      int c0 = c == 0 ? 1 : 0, c1 = c == 2 ? 1 : 2;
      return B(r0, c0) * B(r1, c1) - B(r0, c1) * B(r1, c0);
    };
    CycloNum det = B(0, 0) * minor(0, 0) - B(0, 1) * minor(0, 1) + B(0, 2) * minor(0, 2);
    int s = det.sign();
    if (s == 0) return;  // affine
    Vec x(3, F_->zero());
    for (int i = 0; i < 3; ++i) {
      CycloNum row = F_->zero();
      for (int j = 0; j < 3; ++j) {
        CycloNum cof = minor(j, i);
        if ((i + j) % 2) cof = -cof;
        row += cof;
      }
      x[i] = s > 0 ? row : -row;
    }
    x0_ = std::move(x);
  }

  CoxeterType type_;
  const CycloField* F_;
  int n_ = 0;
  std::vector<CycloNum> b_;
  std::vector<Mat> gens_;
  std::optional<Vec> x0_;
};

// coset c <J>; rank = |J|
struct Residue {
  GroupElement chamber;
  std::vector<int> J;

  int res_rank() const { return static_cast<int>(J.size()); }
};

// elements of the finite standard parabolic W_J, deterministic order
inline std::vector<GroupElement> parabolic_elements(const CoxeterSystem& sys,
                                                    const std::vector<int>& J) {
  std::vector<GroupElement> out{sys.identity()};
  std::vector<size_t> hashes{out[0].hash()};
  size_t lo = 0;
  while (lo < out.size()) {
    size_t hi = out.size();
    for (size_t k = lo; k < hi; ++k)
      for (int s : J) {
        GroupElement child = sys.multiply(out[k], sys.generator(s));
        bool found = false;
        for (size_t i = 0; i < out.size() && !found; ++i)
          if (hashes[i] == child.hash() && out[i] == child) found = true;
        if (!found) {
          hashes.push_back(child.hash());
          out.push_back(std::move(child));
        }
      }
    lo = hi;
  }
  return out;
}

inline std::vector<GroupElement> residue_chambers(const CoxeterSystem& sys, const Residue& r) {
  std::vector<GroupElement> out;
  for (const auto& u : parabolic_elements(sys, r.J)) out.push_back(sys.multiply(r.chamber, u));
  return out;
}

inline bool residue_contains(const CoxeterSystem& sys, const Residue& r, const GroupElement& x) {
  // x in c<J>  iff  c^{-1} x in <J>
  GroupElement u = sys.multiply(sys.inverse(r.chamber), x);
  for (uint8_t s : u.word)
    if (std::find(r.J.begin(), r.J.end(), static_cast<int>(s)) == r.J.end()) return false;
  return true;
}

// the gate of R seen from x: unique z in R with d(x,y) = d(x,z) + d(z,y)
inline GroupElement projection(const CoxeterSystem& sys, const GroupElement& x, const Residue& r) {
  std::vector<GroupElement> ch = residue_chambers(sys, r);
  int best = -1, bestd = 0;
  for (size_t i = 0; i < ch.size(); ++i) {
    int d = sys.distance(x, ch[i]);
    if (best < 0 || d < bestd) {
      best = static_cast<int>(i);
      bestd = d;
    }
  }
  return ch[static_cast<size_t>(best)];
}

// chambers x = w_0, ..., w_k = y of a minimal gallery, following the
// ShortLex reduced word of x^{-1} y
inline std::vector<GroupElement> minimal_gallery(const CoxeterSystem& sys, const GroupElement& x,
                                                 const GroupElement& y) {
  GroupElement z = sys.multiply(sys.inverse(x), y);
  std::vector<GroupElement> g{x};
  GroupElement cur = x;
  for (uint8_t s : z.word) {
    cur = sys.multiply(cur, sys.generator(s));
    g.push_back(cur);
  }
  return g;
}

}  // namespace prenil
