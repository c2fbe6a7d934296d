#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kc/matrix.hpp"
#include "kc/metabelian.hpp"
#include "kc/report.hpp"
#include "kc/snf.hpp"

namespace kc {

class UnsupportedRing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotACycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Free chain complex; d(r): C_r -> C_{r-1} is a rank(r) x rank(r-1) matrix.
template <class R>
class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(R zero) : zero_(ring_zero_like(zero)) {}

  const R& zero() const { return zero_; }
  std::size_t rank(int r) const {
    auto it = ranks_.find(r);
    return it == ranks_.end() ? 0 : it->second;
  }
  void set_rank(int r, std::size_t n) {
    if (n == 0)
      ranks_.erase(r);
    else
      ranks_[r] = n;
  }
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  bool is_zero() const { return ranks_.empty(); }
  int lo() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
  int hi() const { return ranks_.empty() ? -1 : ranks_.rbegin()->first; }

  Matrix<R> d(int r) const {
    auto it = d_.find(r);
    if (it != d_.end()) return it->second;
    return Matrix<R>(rank(r), rank(r - 1), zero_);
  }
  void set_d(int r, const Matrix<R>& m) {
    if (m.rows() != rank(r) || m.cols() != rank(r - 1))
      throw std::invalid_argument("boundary d_" + std::to_string(r) + " has wrong shape");
    if (m.is_zero())
      d_.erase(r);
    else
      d_[r] = m;
  }
  const std::map<int, Matrix<R>>& boundaries() const { return d_; }
  Matrix<R> zeros(int r, int s) const { return Matrix<R>(rank(r), rank(s), zero_); }
  Matrix<R> id(int r) const { return Matrix<R>::identity(rank(r), zero_); }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.ranks_ != b.ranks_) return false;
    for (const auto& [r, n] : a.ranks_) {
      (void)n;
      if (a.d(r) != b.d(r)) return false;
    }
    return a.d(a.hi() + 1) == b.d(b.hi() + 1);
  }

 private:
  R zero_{};
  std::map<int, std::size_t> ranks_;
  std::map<int, Matrix<R>> d_;
};

// Degree-preserving (shift 0) or degree-raising (shift k) family of maps C_r -> D_{r+k}.
template <class R>
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex<R> src, ChainComplex<R> tgt, int shift = 0)
      : src_(std::move(src)), tgt_(std::move(tgt)), shift_(shift) {}

  static ChainMap identity(const ChainComplex<R>& C) {
    ChainMap f(C, C);
    for (const auto& [r, n] : C.ranks()) f.set(r, C.id(r));
    return f;
  }
  static ChainMap zero(const ChainComplex<R>& C, const ChainComplex<R>& D, int shift = 0) {
    return ChainMap(C, D, shift);
  }

  const ChainComplex<R>& source() const { return src_; }
  const ChainComplex<R>& target() const { return tgt_; }
  int shift() const { return shift_; }
  Matrix<R> at(int r) const {
    auto it = m_.find(r);
    if (it != m_.end()) return it->second;
    return Matrix<R>(src_.rank(r), tgt_.rank(r + shift_), src_.zero());
  }
  void set(int r, const Matrix<R>& m) {
    if (m.rows() != src_.rank(r) || m.cols() != tgt_.rank(r + shift_))
      throw std::invalid_argument("chain map component " + std::to_string(r) + " has wrong shape");
    if (m.is_zero())
      m_.erase(r);
    else
      m_[r] = m;
  }
  const std::map<int, Matrix<R>>& components() const { return m_; }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [r, n] : src_.ranks()) {
      (void)n;
      out.push_back(r);
    }
    return out;
  }

  // "this then g"
  ChainMap then(const ChainMap& g) const {
    ChainMap h(src_, g.tgt_, shift_ + g.shift_);
    for (int r : degrees()) h.set(r, at(r) * g.at(r + shift_));
    return h;
  }
  ChainMap operator+(const ChainMap& o) const {
    ChainMap h(src_, tgt_, shift_);
    for (int r : degrees()) h.set(r, at(r) + o.at(r));
    return h;
  }
  ChainMap operator-(const ChainMap& o) const {
    ChainMap h(src_, tgt_, shift_);
    for (int r : degrees()) h.set(r, at(r) - o.at(r));
    return h;
  }
  ChainMap operator-() const {
    ChainMap h(src_, tgt_, shift_);
    for (int r : degrees()) h.set(r, -at(r));
    return h;
  }
  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    if (a.shift_ != b.shift_ || !(a.src_ == b.src_) || !(a.tgt_ == b.tgt_)) return false;
    for (int r : a.degrees())
      if (a.at(r) != b.at(r)) return false;
    return true;
  }

 private:
  ChainComplex<R> src_, tgt_;
  int shift_ = 0;
  std::map<int, Matrix<R>> m_;
};

// A homotopy k: C_r -> D_{r+1} with f - g = d k + k d.
template <class R>
using ChainHomotopy = ChainMap<R>;

// Offsets for direct-sum blocks.
class BlockLayout {
 public:
  BlockLayout() = default;
  explicit BlockLayout(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    std::size_t o = 0;
    for (auto s : sizes_) {
      offsets_.push_back(o);
      o += s;
    }
    total_ = o;
  }
  std::size_t size(std::size_t i) const { return sizes_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t total() const { return total_; }
  std::size_t count() const { return sizes_.size(); }

 private:
  std::vector<std::size_t> sizes_, offsets_;
  std::size_t total_ = 0;
};

// Matrix of a map between direct sums, filled block by block as (from summand, to summand).
template <class R>
class BlockMatrix {
 public:
  BlockMatrix(BlockLayout src, BlockLayout tgt, const R& zero)
      : src_(std::move(src)), tgt_(std::move(tgt)), m_(src_.total(), tgt_.total(), zero) {}
  void set(std::size_t from, std::size_t to, const Matrix<R>& b) {
    if (b.rows() != src_.size(from) || b.cols() != tgt_.size(to))
      throw std::invalid_argument("block (" + std::to_string(from) + "," + std::to_string(to) + ") has wrong shape " +
                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                                  std::to_string(src_.size(from)) + "x" + std::to_string(tgt_.size(to)));
    m_.set_block(src_.offset(from), tgt_.offset(to), b);
  }
  Matrix<R> get(std::size_t from, std::size_t to) const {
    return m_.block(src_.offset(from), tgt_.offset(to), src_.size(from), tgt_.size(to));
  }
  const Matrix<R>& matrix() const { return m_; }

 private:
  BlockLayout src_, tgt_;
  Matrix<R> m_;
};

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

template <class R>
Report validate_complex(const ChainComplex<R>& C) {
  Report rep;
  for (int r = C.lo(); r <= C.hi() + 1; ++r) {
    Matrix<R> p = C.d(r) * C.d(r - 1);
    if (!p.is_zero()) {
      rep.add("d^2 = 0", false, "fails at degree " + std::to_string(r));
      return rep;
    }
  }
  rep.add("d^2 = 0", true);
  return rep;
}

template <class R>
Report validate_chain_map(const ChainMap<R>& f) {
  Report rep;
  if (f.shift() != 0) {
    rep.add("chain map", false, "nonzero degree shift");
    return rep;
  }
  const auto& C = f.source();
  const auto& D = f.target();
  int lo = std::min(C.lo(), D.lo()), hi = std::max(C.hi(), D.hi()) + 1;
  for (int r = lo; r <= hi; ++r) {
    // d then f == f then d, as maps C_r -> D_{r-1}
    if (C.d(r) * f.at(r - 1) != f.at(r) * D.d(r)) {
      rep.add("chain map", false, "square fails at degree " + std::to_string(r));
      return rep;
    }
  }
  rep.add("chain map", true);
  return rep;
}

// f - g = d k + k d
template <class R>
Report validate_homotopy(const ChainHomotopy<R>& k, const ChainMap<R>& f, const ChainMap<R>& g) {
  Report rep;
  const auto& C = f.source();
  const auto& D = f.target();
  int lo = std::min(C.lo(), D.lo()) - 1, hi = std::max(C.hi(), D.hi()) + 1;
  for (int r = lo; r <= hi; ++r) {
    Matrix<R> lhs = f.at(r) - g.at(r);
    Matrix<R> rhs = C.d(r) * k.at(r - 1) + k.at(r) * D.d(r + 1);
    if (lhs != rhs) {
      rep.add("homotopy", false, "identity fails at degree " + std::to_string(r));
      return rep;
    }
  }
  rep.add("homotopy", true);
  return rep;
}

template <class R>
ChainComplex<R> direct_sum(const ChainComplex<R>& A, const ChainComplex<R>& B) {
  ChainComplex<R> S(A.zero());
  int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
  if (A.is_zero()) return B;
  if (B.is_zero()) return A;
  for (int r = lo; r <= hi; ++r) S.set_rank(r, A.rank(r) + B.rank(r));
  for (int r = lo; r <= hi + 1; ++r) S.set_d(r, Matrix<R>::direct_sum(A.d(r), B.d(r)));
  return S;
}

template <class R>
ChainMap<R> direct_sum(const ChainMap<R>& f, const ChainMap<R>& g) {
  ChainMap<R> h(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), f.shift());
  for (const auto& [r, n] : h.source().ranks()) {
    (void)n;
    h.set(r, Matrix<R>::direct_sum(f.at(r), g.at(r)));
  }
  return h;
}

// (C^{n-*})_r = C^{n-r}, boundary (-1)^r d* : C^{n-r} -> C^{n-r+1}.
template <class R>
ChainComplex<R> dual_complex(const ChainComplex<R>& C, int n) {
  ChainComplex<R> D(C.zero());
  for (const auto& [r, k] : C.ranks()) D.set_rank(n - r, k);
  for (int r = n - C.hi(); r <= n - C.lo() + 1; ++r)
    D.set_d(r, C.d(n - r + 1).adjoint().signed_by(sign_pow(r)));
  return D;
}

// Dual map g = f*: D^{n-*} -> C^{n-*} for f: C -> D.
template <class R>
ChainMap<R> dual_map(const ChainMap<R>& f, int n) {
  ChainMap<R> g(dual_complex(f.target(), n), dual_complex(f.source(), n));
  for (const auto& [r, k] : g.source().ranks()) {
    (void)k;
    g.set(r, f.at(n - r).adjoint());
  }
  return g;
}

// C(f)_r = D_r + C_{r-1}, d = [[d_D, (-1)^{r-1} f], [0, d_C]] (column convention).
template <class R>
ChainComplex<R> mapping_cone(const ChainMap<R>& f) {
  const auto& C = f.source();
  const auto& D = f.target();
  ChainComplex<R> K(C.zero());
  int lo = std::min(D.lo(), C.lo() + 1), hi = std::max(D.hi(), C.hi() + 1);
  if (C.is_zero()) return D;
  if (D.is_zero()) {
    lo = C.lo() + 1;
    hi = C.hi() + 1;
  }
  for (int r = lo; r <= hi; ++r) K.set_rank(r, D.rank(r) + C.rank(r - 1));
  for (int r = lo; r <= hi + 1; ++r) {
    BlockMatrix<R> b(BlockLayout({D.rank(r), C.rank(r - 1)}), BlockLayout({D.rank(r - 1), C.rank(r - 2)}), C.zero());
    b.set(0, 0, D.d(r));
    b.set(1, 0, f.at(r - 1).signed_by(sign_pow(r - 1)));
    b.set(1, 1, C.d(r - 1));
    K.set_d(r, b.matrix());
  }
  return K;
}

template <class S, class R, class F>
ChainComplex<S> change_coefficients(const ChainComplex<R>& C, const S& zero, F f) {
  ChainComplex<S> D(zero);
  for (const auto& [r, n] : C.ranks()) D.set_rank(r, n);
  for (const auto& [r, m] : C.boundaries()) D.set_d(r, map_entries(m, zero, f));
  return D;
}

template <class S, class R, class F>
ChainMap<S> change_coefficients(const ChainMap<R>& g, const S& zero, F f) {
  ChainMap<S> h(change_coefficients(g.source(), zero, f), change_coefficients(g.target(), zero, f), g.shift());
  for (const auto& [r, m] : g.components()) h.set(r, map_entries(m, zero, f));
  return h;
}

inline ChainComplex<GRE> change_coefficients(const ChainComplex<GRE>& C, const RingMap& m) {
  return change_coefficients(C, GRE(m.target()), [&](const GRE& x) { return m.apply(x); });
}
inline ChainMap<GRE> change_coefficients(const ChainMap<GRE>& g, const RingMap& m) {
  return change_coefficients(g, GRE(m.target()), [&](const GRE& x) { return m.apply(x); });
}

struct DegreeHomology {
  std::size_t free_rank = 0;
  std::vector<std::string> torsion;  // normalized non-unit invariant factors
  friend bool operator==(const DegreeHomology& a, const DegreeHomology& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

struct HomologyReport {
  std::string ring;
  std::map<int, DegreeHomology> degrees;  // only nonzero groups
  bool is_zero() const { return degrees.empty(); }
  DegreeHomology at(int r) const {
    auto it = degrees.find(r);
    return it == degrees.end() ? DegreeHomology{} : it->second;
  }
  std::string str() const;
  friend bool operator==(const HomologyReport& a, const HomologyReport& b) { return a.degrees == b.degrees; }
  friend bool operator!=(const HomologyReport& a, const HomologyReport& b) { return !(a == b); }
};

template <class R>
bool is_unit_factor(const R& x) {
  if constexpr (std::is_same_v<R, LaurentPoly>)
    return x.is_unit();
  else if constexpr (std::is_same_v<R, Int>)
    return x == 1 || x == -1;
  else
    return !ring_is_zero(x);
}

template <class R>
const char* ring_tag() {
  if constexpr (std::is_same_v<R, Int>)
    return "Z";
  else if constexpr (std::is_same_v<R, Rat>)
    return "Q";
  else if constexpr (std::is_same_v<R, LaurentPoly>)
    return "QZ";
  else
    return "?";
}

// Presentation of H_r: cycles x = y K, class coordinates y Q reduced mod factors.
template <class R>
struct HomologyPresentation {
  Matrix<R> kernel;   // k x rank(r), rows span the cycles
  Matrix<R> Uinv;     // from the SNF of d_r
  std::size_t rank_d = 0;
  Matrix<R> Q, Qinv;  // from the SNF of the boundary relations in cycle coordinates
  std::vector<R> factors;  // invariant factors of the relations (length = their rank)

  std::size_t k() const { return kernel.rows(); }
  std::vector<R> cycle_coords(const std::vector<R>& x) const {
    std::vector<R> w = vec_mat(x, Uinv);
    return std::vector<R>(w.begin() + static_cast<std::ptrdiff_t>(rank_d), w.end());
  }
  std::vector<R> class_coords(const std::vector<R>& x) const { return vec_mat(cycle_coords(x), Q); }
  // cycle representing the j-th generator
  std::vector<R> generator(std::size_t j) const {
    std::vector<R> e(k(), kernel.zero());
    e[j] = ring_one_like(kernel.zero());
    return vec_mat(vec_mat(e, Qinv), kernel);
  }
};

template <class R>
HomologyPresentation<R> homology_presentation(const ChainComplex<R>& C, int r) {
  HomologyPresentation<R> hp;
  SnfResult<R> s = snf(C.d(r));
  hp.rank_d = s.rank;
  hp.Uinv = s.Uinv;
  hp.kernel = s.U.block(s.rank, 0, C.rank(r) - s.rank, C.rank(r));
  Matrix<R> B = C.d(r + 1) * s.Uinv;
  Matrix<R> X = B.block(0, s.rank, B.rows(), B.cols() - s.rank);
  SnfResult<R> t = snf(X);
  hp.Q = t.V;
  hp.Qinv = t.Vinv;
  hp.factors = t.factors;
  return hp;
}

template <class R>
HomologyReport homology(const ChainComplex<R>& C) {
  static_assert(std::is_same_v<R, Int> || std::is_same_v<R, Rat> || std::is_same_v<R, LaurentPoly>,
                "homology is offered over Z, Q and Q[t,t^-1] only");
  HomologyReport rep;
  rep.ring = ring_tag<R>();
  for (const auto& [r, n] : C.ranks()) {
    (void)n;
    HomologyPresentation<R> hp = homology_presentation(C, r);
    DegreeHomology dh;
    dh.free_rank = hp.k() - hp.factors.size();
    for (const auto& f : hp.factors)
      if (!is_unit_factor(f)) dh.torsion.push_back(ring_str(f));
    if (dh.free_rank > 0 || !dh.torsion.empty()) rep.degrees[r] = dh;
  }
  return rep;
}

inline HomologyReport homology(const ChainComplex<GRE>&) {
  throw UnsupportedRing("homology over Z[Z x| H] is not offered; change coefficients first");
}

template <class R>
struct Homologous {
  bool value = false;
  std::vector<R> witness;  // w with x - y = w d_{r+1}
};

template <class R>
Homologous<R> is_homologous(const ChainComplex<R>& C, int r, const std::vector<R>& x, const std::vector<R>& y) {
  if (!vec_is_zero(vec_mat(x, C.d(r))) || !vec_is_zero(vec_mat(y, C.d(r))))
    throw NotACycle("is_homologous: argument is not a cycle in degree " + std::to_string(r));
  auto w = solve_row(C.d(r + 1), vec_sub(x, y));
  if (!w) return {false, {}};
  return {true, *w};
}

// Coefficient levels for Poincare certification.
inline std::optional<Int> level_Z(const Int& x) { return x; }
inline std::optional<Int> level_Z(const Rat& x) {
  if (x.get_den() != 1) return std::nullopt;
  return Int(x.get_num());
}
inline std::optional<Int> level_Z(const LaurentPoly& x) { return level_Z(x.eval(Rat(1))); }
inline std::optional<Int> level_Z(const GRE& x) { return augment_Z(x); }
inline Rat level_Q(const Int& x) { return Rat(x); }
inline Rat level_Q(const Rat& x) { return x; }
inline Rat level_Q(const LaurentPoly& x) { return x.eval(Rat(1)); }
inline Rat level_Q(const GRE& x) { return augment_Q(x); }
inline std::optional<LaurentPoly> level_QZ(const Int&) { return std::nullopt; }
inline std::optional<LaurentPoly> level_QZ(const Rat&) { return std::nullopt; }
inline std::optional<LaurentPoly> level_QZ(const LaurentPoly& x) { return x; }
inline std::optional<LaurentPoly> level_QZ(const GRE& x) { return augment_QZ(x); }

struct LevelHomology {
  std::optional<HomologyReport> Z, Q, QZ;
  friend bool operator==(const LevelHomology& a, const LevelHomology& b) {
    return a.Z == b.Z && a.Q == b.Q && a.QZ == b.QZ;
  }
  bool all_zero() const {
    return (!Z || Z->is_zero()) && (!Q || Q->is_zero()) && (!QZ || QZ->is_zero());
  }
  std::string str() const;
};

template <class R>
std::optional<ChainComplex<Int>> complex_Z(const ChainComplex<R>& C) {
  ChainComplex<Int> D{Int(0)};
  for (const auto& [r, n] : C.ranks()) D.set_rank(r, n);
  for (const auto& [r, m] : C.boundaries()) {
    Matrix<Int> z(m.rows(), m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (ring_is_zero(m(i, j))) continue;
        auto v = level_Z(m(i, j));
        if (!v) return std::nullopt;
        z(i, j) = *v;
      }
    D.set_d(r, z);
  }
  return D;
}

template <class R>
ChainComplex<Rat> complex_Q(const ChainComplex<R>& C) {
  return change_coefficients(C, Rat(0), [](const R& x) { return level_Q(x); });
}

template <class R>
std::optional<ChainComplex<LaurentPoly>> complex_QZ(const ChainComplex<R>& C) {
  if constexpr (std::is_same_v<R, Int> || std::is_same_v<R, Rat>) {
    return std::nullopt;
  } else {
    return change_coefficients(C, LaurentPoly(), [](const R& x) { return *level_QZ(x); });
  }
}

template <class R>
LevelHomology level_homology(const ChainComplex<R>& C) {
  LevelHomology lh;
  if (auto z = complex_Z(C)) lh.Z = homology(*z);
  lh.Q = homology(complex_Q(C));
  if (auto q = complex_QZ(C)) lh.QZ = homology(*q);
  return lh;
}

template <class R>
long euler_characteristic(const ChainComplex<R>& C) {
  long chi = 0;
  for (const auto& [r, n] : C.ranks()) chi += sign_pow(r) * static_cast<long>(n);
  return chi;
}

}  // namespace kc
