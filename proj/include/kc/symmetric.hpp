#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "kc/chains.hpp"

namespace kc {

class NotConnected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundaryMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPoincare : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// phi_s: C^{n-r+s} -> C_r, stored as a rank(n-r+s) x rank(r) matrix.
template <class R>
class SymmetricStructure {
 public:
  SymmetricStructure() = default;
  SymmetricStructure(int n, int eps = 1) : n_(n), eps_(eps) {}

  int n() const { return n_; }
  int eps() const { return eps_; }
  int max_s() const { return phi_.empty() ? -1 : phi_.rbegin()->first; }
  const std::map<int, std::map<int, Matrix<R>>>& components() const { return phi_; }

  Matrix<R> at(const ChainComplex<R>& C, int s, int r) const {
    auto it = phi_.find(s);
    if (it != phi_.end()) {
      auto jt = it->second.find(r);
      if (jt != it->second.end()) return jt->second;
    }
    return Matrix<R>(C.rank(n_ - r + s), C.rank(r), C.zero());
  }
  void set(const ChainComplex<R>& C, int s, int r, const Matrix<R>& m) {
    if (m.rows() != C.rank(n_ - r + s) || m.cols() != C.rank(r))
      throw std::invalid_argument("phi_" + std::to_string(s) + " component " + std::to_string(r) +
                                  " has wrong shape");
    if (m.is_zero()) {
      auto it = phi_.find(s);
      if (it != phi_.end()) {
        it->second.erase(r);
        if (it->second.empty()) phi_.erase(it);
      }
      return;
    }
    phi_[s][r] = m;
  }
  // (T phi_s) component C^{n-r+s} -> C_r: eps (-1)^{r(n-r+s)} phi_s*
  Matrix<R> T_at(const ChainComplex<R>& C, int s, int r) const {
    const int q = n_ - r + s;
    return at(C, s, q).adjoint().signed_by(eps_ * sign_pow(static_cast<long>(r) * q));
  }

  SymmetricStructure negated() const {
    SymmetricStructure o(n_, eps_);
    o.phi_ = phi_;
    for (auto& [s, m] : o.phi_)
      for (auto& [r, x] : m) x = -x;
    return o;
  }
  bool is_zero() const { return phi_.empty(); }
  friend bool operator==(const SymmetricStructure& a, const SymmetricStructure& b) {
    return a.n_ == b.n_ && a.eps_ == b.eps_ && a.phi_ == b.phi_;
  }

 private:
  int n_ = 0, eps_ = 1;
  std::map<int, std::map<int, Matrix<R>>> phi_;
};

template <class R>
struct SymmetricComplex {
  ChainComplex<R> C;
  SymmetricStructure<R> phi;
  int n() const { return phi.n(); }
};

// (f: C -> D, (dphi, phi)), dphi of dimension n+1, phi of dimension n.
template <class R>
struct SymmetricPair {
  ChainMap<R> f;
  SymmetricStructure<R> dphi, phi;
  const ChainComplex<R>& C() const { return f.source(); }
  const ChainComplex<R>& D() const { return f.target(); }
  int n() const { return dphi.n(); }
};

template <class R>
SymmetricStructure<R> direct_sum(const ChainComplex<R>& A, const SymmetricStructure<R>& a, const ChainComplex<R>& B,
                                 const SymmetricStructure<R>& b) {
  ChainComplex<R> S = direct_sum(A, B);
  SymmetricStructure<R> out(a.n(), a.eps());
  const int smax = std::max(a.max_s(), b.max_s());
  for (int s = 0; s <= smax; ++s)
    for (const auto& [r, k] : S.ranks()) {
      (void)k;
      out.set(S, s, r, Matrix<R>::direct_sum(a.at(A, s, r), b.at(B, s, r)));
    }
  return out;
}

// Coboundary relation for phi_s at target degree r (maps C^{n-r+s-1} -> C_r).
template <class R>
Matrix<R> structure_defect(const ChainComplex<R>& C, const SymmetricStructure<R>& phi, int s, int r) {
  const int n = phi.n();
  Matrix<R> m = phi.at(C, s, r + 1) * C.d(r + 1) +
                (C.d(n - r + s).adjoint() * phi.at(C, s, r)).signed_by(sign_pow(r));
  if (s > 0) {
    Matrix<R> prev = phi.at(C, s - 1, r) + phi.T_at(C, s - 1, r).signed_by(sign_pow(s));
    m = m + prev.signed_by(sign_pow(n + s - 1));
  }
  return m;
}

template <class R>
Report validate_structure(const ChainComplex<R>& C, const SymmetricStructure<R>& phi) {
  Report rep;
  for (int s = 0; s <= phi.max_s() + 1; ++s)
    for (int r = C.lo() - 1; r <= C.hi() + 1; ++r)
      if (!structure_defect(C, phi, s, r).is_zero()) {
        rep.add("structure relations", false, "fails at (s, r) = (" + std::to_string(s) + ", " + std::to_string(r) + ")");
        return rep;
      }
  rep.add("structure relations", true);
  return rep;
}

// Relative relation for a pair at (s, r), as maps D^{n-r+s} -> D_r (n = dim C).
template <class R>
Matrix<R> pair_defect(const SymmetricPair<R>& p, int s, int r) {
  const auto& D = p.D();
  const auto& C = p.C();
  const int n = p.phi.n();
  Matrix<R> m = structure_defect(D, p.dphi, s, r);
  Matrix<R> fpf = p.f.at(n - r + s).adjoint() * p.phi.at(C, s, r) * p.f.at(r);
  return m + fpf.signed_by(sign_pow(n));
}

template <class R>
Report validate_pair_relations(const SymmetricPair<R>& p) {
  Report rep;
  rep.merge(validate_chain_map(p.f), "map: ");
  rep.merge(validate_structure(p.C(), p.phi), "boundary: ");
  if (p.dphi.n() != p.phi.n() + 1) rep.add("pair dimensions", false, "dphi must have dimension dim(phi) + 1");
  const int smax = std::max(p.dphi.max_s(), p.phi.max_s()) + 1;
  const int lo = std::min(p.D().lo(), p.C().lo()) - 1, hi = std::max(p.D().hi(), p.C().hi()) + 1;
  for (int s = 0; s <= smax; ++s)
    for (int r = lo; r <= hi; ++r)
      if (!pair_defect(p, s, r).is_zero()) {
        rep.add("relative structure relations", false,
                "fails at (s, r) = (" + std::to_string(s) + ", " + std::to_string(r) + ")");
        return rep;
      }
  rep.add("relative structure relations", true);
  return rep;
}

// phi_0 as a chain map C^{n-*} -> C.
template <class R>
ChainMap<R> duality_map(const ChainComplex<R>& C, const SymmetricStructure<R>& phi) {
  ChainMap<R> f(dual_complex(C, phi.n()), C);
  for (const auto& [r, k] : C.ranks()) {
    (void)k;
    if (f.source().rank(r) > 0) f.set(r, phi.at(C, 0, r));
  }
  return f;
}

// (dphi_0, (-1)^{N+r} phi_0 f*): D^{N-*} -> C(f).
template <class R>
ChainMap<R> duality_map(const SymmetricPair<R>& p) {
  const auto& D = p.D();
  const auto& C = p.C();
  const int N = p.dphi.n();
  ChainComplex<R> cone = mapping_cone(p.f);
  ChainMap<R> g(dual_complex(D, N), cone);
  for (const auto& [r, k] : g.source().ranks()) {
    (void)k;
    Matrix<R> a = p.dphi.at(D, 0, r);
    Matrix<R> b = (p.f.at(N - r).adjoint() * p.phi.at(C, 0, r - 1)).signed_by(sign_pow(N + r));
    g.set(r, Matrix<R>::hcat(a, b));
  }
  return g;
}

struct PoincareCertificate {
  bool chain_map = false;
  LevelHomology cone;  // homology of the duality cone at Z, Q, Q[Z]
  bool ok() const { return chain_map && cone.all_zero(); }
};

template <class R>
PoincareCertificate certify_poincare(const ChainComplex<R>& C, const SymmetricStructure<R>& phi) {
  PoincareCertificate pc;
  ChainMap<R> f = duality_map(C, phi);
  pc.chain_map = validate_chain_map(f).ok();
  if (pc.chain_map) pc.cone = level_homology(mapping_cone(f));
  return pc;
}

template <class R>
PoincareCertificate certify_poincare(const SymmetricPair<R>& p) {
  PoincareCertificate pc;
  ChainMap<R> f = duality_map(p);
  pc.chain_map = validate_chain_map(f).ok();
  if (pc.chain_map) pc.cone = level_homology(mapping_cone(f));
  return pc;
}

inline void add_certificate(Report& rep, const std::string& name, const PoincareCertificate& pc) {
  if (!pc.chain_map) {
    rep.add(name, false, "duality map is not a chain map");
    return;
  }
  rep.add(name, pc.cone.all_zero(), pc.cone.all_zero() ? "" : "duality cone homology " + pc.cone.str());
}

template <class R>
Report validate_symmetric(const SymmetricComplex<R>& X, bool require_poincare = true) {
  Report rep;
  rep.merge(validate_complex(X.C));
  rep.merge(validate_structure(X.C, X.phi));
  if (require_poincare && rep.ok()) add_certificate(rep, "Poincare", certify_poincare(X.C, X.phi));
  return rep;
}

template <class R>
Report validate_symmetric(const SymmetricPair<R>& P, bool require_poincare = true) {
  Report rep;
  rep.merge(validate_complex(P.C()), "C: ");
  rep.merge(validate_complex(P.D()), "D: ");
  rep.merge(validate_pair_relations(P));
  if (require_poincare && rep.ok()) {
    add_certificate(rep, "boundary Poincare", certify_poincare(P.C(), P.phi));
    add_certificate(rep, "pair Poincare", certify_poincare(P));
  }
  return rep;
}

// Algebraic Thom complex (C(f), dphi/phi).
template <class R>
SymmetricComplex<R> algebraic_thom(const SymmetricPair<R>& p) {
  const auto& D = p.D();
  const auto& C = p.C();
  const int N = p.dphi.n();
  SymmetricComplex<R> X;
  X.C = mapping_cone(p.f);
  X.phi = SymmetricStructure<R>(N, p.dphi.eps());
  const int smax = std::max(p.dphi.max_s(), p.phi.max_s() + 1);
  for (int s = 0; s <= smax; ++s)
    for (const auto& [r, k] : X.C.ranks()) {
      (void)k;
      const int q = N - r + s;  // source C(f)^q = D^q + C^{q-1}
      BlockMatrix<R> b(BlockLayout({D.rank(q), C.rank(q - 1)}), BlockLayout({D.rank(r), C.rank(r - 1)}), C.zero());
      b.set(0, 0, p.dphi.at(D, s, r));
      b.set(0, 1, (p.f.at(q).adjoint() * p.phi.at(C, s, r - 1)).signed_by(sign_pow(N - r - 1)));
      if (s >= 1) b.set(1, 1, p.phi.T_at(C, s - 1, r - 1).signed_by(sign_pow(N - r + s - 1)));
      X.phi.set(X.C, s, r, b.matrix());
    }
  return X;
}

// Boundary (dC, dphi) of a connected symmetric complex: dC_r = C_{r+1} + C^{n-r}.
template <class R>
SymmetricComplex<R> boundary_construction(const SymmetricComplex<R>& X) {
  const auto& C = X.C;
  const int n = X.phi.n();
  const int eps = X.phi.eps();
  ChainComplex<R> Cd = dual_complex(C, n);
  SymmetricComplex<R> B;
  B.C = ChainComplex<R>(C.zero());
  const int lo = std::min(C.lo() - 1, n - C.hi()), hi = std::max(C.hi() - 1, n - C.lo());
  for (int r = lo; r <= hi; ++r) B.C.set_rank(r, C.rank(r + 1) + C.rank(n - r));
  for (int r = lo; r <= hi + 1; ++r) {
    BlockMatrix<R> b(BlockLayout({C.rank(r + 1), C.rank(n - r)}), BlockLayout({C.rank(r), C.rank(n - r + 1)}),
                     C.zero());
    b.set(0, 0, C.d(r + 1));
    b.set(1, 0, X.phi.at(C, 0, r).signed_by(sign_pow(r)));
    b.set(1, 1, Cd.d(r));
    B.C.set_d(r, b.matrix());
  }
  B.phi = SymmetricStructure<R>(n - 1, eps);
  const int smax = std::max(0, X.phi.max_s() - 1);
  for (int s = 0; s <= smax; ++s)
    for (const auto& [r, k] : B.C.ranks()) {
      (void)k;
      // source dC^{n-1-r+s} = C^{n-r+s} + C_{r-s+1}; target C_{r+1} + C^{n-r}
      BlockMatrix<R> b(BlockLayout({C.rank(n - r + s), C.rank(r - s + 1)}),
                       BlockLayout({C.rank(r + 1), C.rank(n - r)}), C.zero());
      if (s == 0) {
        b.set(0, 0, X.phi.T_at(C, 1, r + 1).signed_by(sign_pow(n - r - 1)));
        b.set(1, 0, C.id(r + 1).signed_by(eps * sign_pow(static_cast<long>(r) * (n - r - 1))));
        b.set(0, 1, Matrix<R>::identity(C.rank(n - r), C.zero()));
      } else {
        b.set(0, 0, X.phi.T_at(C, s + 1, r + 1).signed_by(sign_pow(n - r + s - 1)));
      }
      B.phi.set(B.C, s, r, b.matrix());
    }
  return B;
}

// Poincare thickening (i: dC -> C^{n-*}, (0, dphi)) with i = (0, 1).
template <class R>
SymmetricPair<R> poincare_thickening(const SymmetricComplex<R>& X) {
  const auto& C = X.C;
  const int n = X.phi.n();
  SymmetricComplex<R> B = boundary_construction(X);
  ChainComplex<R> Cd = dual_complex(C, n);
  SymmetricPair<R> P;
  P.f = ChainMap<R>(B.C, Cd);
  for (const auto& [r, k] : B.C.ranks()) {
    (void)k;
    BlockMatrix<R> b(BlockLayout({C.rank(r + 1), C.rank(n - r)}), BlockLayout({C.rank(n - r)}), C.zero());
    b.set(1, 0, Matrix<R>::identity(C.rank(n - r), C.zero()));
    P.f.set(r, b.matrix());
  }
  P.dphi = SymmetricStructure<R>(n, X.phi.eps());
  P.phi = B.phi;
  return P;
}

// Union of (f: C -> D, (dphi, -phi)) and (f': C -> D', (dphi', phi)) along (C, phi):
// degreewise D_r + C_{r-1} + D'_r.
template <class R>
SymmetricComplex<R> union_pairs(const SymmetricPair<R>& A, const SymmetricPair<R>& B) {
  if (!(A.C() == B.C())) throw BoundaryMismatch("union: boundary complexes differ");
  if (!(A.phi.negated() == B.phi)) throw BoundaryMismatch("union: boundary structures are not opposite");
  const auto& C = A.C();
  const auto& D = A.D();
  const auto& E = B.D();
  const int N = A.dphi.n();
  const auto& phi = B.phi;
  SymmetricComplex<R> U;
  U.C = ChainComplex<R>(C.zero());
  const int lo = std::min({D.is_zero() ? 1000 : D.lo(), C.is_zero() ? 1000 : C.lo() + 1, E.is_zero() ? 1000 : E.lo()});
  const int hi = std::max({D.hi(), C.is_zero() ? -1000 : C.hi() + 1, E.hi()});
  for (int r = lo; r <= hi; ++r) U.C.set_rank(r, D.rank(r) + C.rank(r - 1) + E.rank(r));
  for (int r = lo; r <= hi + 1; ++r) {
    BlockMatrix<R> b(BlockLayout({D.rank(r), C.rank(r - 1), E.rank(r)}),
                     BlockLayout({D.rank(r - 1), C.rank(r - 2), E.rank(r - 1)}), C.zero());
    b.set(0, 0, D.d(r));
    b.set(1, 0, A.f.at(r - 1).signed_by(sign_pow(r - 1)));
    b.set(1, 1, C.d(r - 1));
    b.set(1, 2, B.f.at(r - 1).signed_by(sign_pow(r - 1)));
    b.set(2, 2, E.d(r));
    U.C.set_d(r, b.matrix());
  }
  U.phi = SymmetricStructure<R>(N, phi.eps());
  const int smax = std::max({A.dphi.max_s(), B.dphi.max_s(), phi.max_s() + 1});
  for (int s = 0; s <= smax; ++s)
    for (const auto& [r, k] : U.C.ranks()) {
      (void)k;
      const int q = N - r + s;  // source D^q + C^{q-1} + D'^q
      BlockMatrix<R> b(BlockLayout({D.rank(q), C.rank(q - 1), E.rank(q)}),
                       BlockLayout({D.rank(r), C.rank(r - 1), E.rank(r)}), C.zero());
      b.set(0, 0, A.dphi.at(D, s, r));
      b.set(0, 1, (A.f.at(q).adjoint() * phi.at(C, s, r - 1)).signed_by(sign_pow(N - r - 1)));
      if (s >= 1) b.set(1, 1, phi.T_at(C, s - 1, r - 1).signed_by(sign_pow(N - r + s - 1)));
      b.set(1, 2, (phi.at(C, s, r) * B.f.at(r)).signed_by(sign_pow(s)));
      b.set(2, 2, B.dphi.at(E, s, r));
      U.phi.set(U.C, s, r, b.matrix());
    }
  return U;
}

// ((f, 1): C + C' -> C', (0, phi + (-phi'))).
template <class R>
SymmetricPair<R> product_cobordism(const ChainMap<R>& f, const SymmetricStructure<R>& phi,
                                   const SymmetricStructure<R>& phi_prime) {
  const auto& C = f.source();
  const auto& Cp = f.target();
  SymmetricPair<R> P;
  ChainComplex<R> S = direct_sum(C, Cp);
  P.f = ChainMap<R>(S, Cp);
  for (const auto& [r, k] : S.ranks()) {
    (void)k;
    P.f.set(r, Matrix<R>::vcat(f.at(r), Cp.id(r)));
  }
  P.phi = direct_sum(C, phi, Cp, phi_prime.negated());
  P.dphi = SymmetricStructure<R>(phi.n() + 1, phi.eps());
  return P;
}

// Structure transport f phi f* for a degree-preserving map f: C -> D.
template <class R>
SymmetricStructure<R> push_structure(const ChainMap<R>& f, const SymmetricStructure<R>& phi) {
  const auto& C = f.source();
  const auto& D = f.target();
  SymmetricStructure<R> out(phi.n(), phi.eps());
  for (int s = 0; s <= phi.max_s(); ++s)
    for (const auto& [r, k] : D.ranks()) {
      (void)k;
      out.set(D, s, r, f.at(phi.n() - r + s).adjoint() * phi.at(C, s, r) * f.at(r));
    }
  return out;
}

// Entrywise ring change of a structure.
template <class S, class R, class F>
SymmetricStructure<S> change_coefficients(const SymmetricStructure<R>& phi, const ChainComplex<S>& target, F f) {
  SymmetricStructure<S> out(phi.n(), phi.eps());
  for (const auto& [s, comps] : phi.components())
    for (const auto& [r, m] : comps) out.set(target, s, r, map_entries(m, target.zero(), f));
  return out;
}

template <class R>
struct ConnectednessReport {
  std::optional<bool> Z, Q;
  bool connected() const { return (!Z || *Z) && (!Q || *Q); }
};

template <class R>
ConnectednessReport<R> connectedness_of_map(const ChainMap<R>& f) {
  ChainComplex<R> K = mapping_cone(f);
  ConnectednessReport<R> rep;
  if (auto z = complex_Z(K)) rep.Z = homology(*z).at(0) == DegreeHomology{};
  rep.Q = homology(complex_Q(K)).at(0) == DegreeHomology{};
  return rep;
}

template <class R>
ConnectednessReport<R> is_connected(const SymmetricComplex<R>& X) {
  return connectedness_of_map(duality_map(X.C, X.phi));
}

template <class R>
ConnectednessReport<R> is_connected(const SymmetricPair<R>& P) {
  return connectedness_of_map(duality_map(P));
}

// Homology of the source, target and cone of a pair at all levels.
template <class R>
struct PairHomology {
  LevelHomology C, D, cone;
  friend bool operator==(const PairHomology& a, const PairHomology& b) {
    return a.C == b.C && a.D == b.D && a.cone == b.cone;
  }
};

template <class R>
PairHomology<R> pair_homology(const SymmetricPair<R>& P) {
  return {level_homology(P.C()), level_homology(P.D()), level_homology(mapping_cone(P.f))};
}

// Four complexes C, D-, D+, Y; maps i-, i+, f-, f+; homotopy g: f- i- ~ f+ i+.
template <class R>
struct SymmetricTriad {
  ChainComplex<R> C, Dm, Dp, Y;
  ChainMap<R> im, ip, fm, fp;
  ChainHomotopy<R> g;
  SymmetricStructure<R> phi, dphim, dphip, Phi;

  SymmetricPair<R> plus_pair() const { return {ip, dphip, phi}; }
  SymmetricPair<R> minus_pair() const { return {im, dphim, phi.negated()}; }
  // E = D- u_C D+
  SymmetricComplex<R> glued_boundary() const { return union_pairs(minus_pair(), plus_pair()); }
  // e = (f-, (-1)^{r-1} g, -f+): E -> Y
  ChainMap<R> glued_map() const {
    SymmetricComplex<R> E = glued_boundary();
    ChainMap<R> e(E.C, Y);
    for (const auto& [r, k] : E.C.ranks()) {
      (void)k;
      BlockMatrix<R> b(BlockLayout({Dm.rank(r), C.rank(r - 1), Dp.rank(r)}), BlockLayout({Y.rank(r)}), C.zero());
      b.set(0, 0, fm.at(r));
      b.set(1, 0, g.at(r - 1).signed_by(sign_pow(r - 1)));
      b.set(2, 0, -fp.at(r));
      e.set(r, b.matrix());
    }
    return e;
  }
  SymmetricPair<R> glued_pair() const {
    SymmetricComplex<R> E = glued_boundary();
    SymmetricPair<R> P;
    P.f = glued_map();
    P.dphi = Phi;
    P.phi = E.phi;
    return P;
  }
};

template <class R>
Report validate_triad(const SymmetricTriad<R>& T, bool require_poincare = true) {
  Report rep;
  rep.merge(validate_complex(T.C), "C: ");
  rep.merge(validate_complex(T.Dm), "D-: ");
  rep.merge(validate_complex(T.Dp), "D+: ");
  rep.merge(validate_complex(T.Y), "Y: ");
  rep.merge(validate_chain_map(T.fm), "f-: ");
  rep.merge(validate_chain_map(T.fp), "f+: ");
  if (!rep.ok()) return rep;
  rep.merge(validate_homotopy(T.g, T.im.then(T.fm), T.ip.then(T.fp)), "g: ");
  rep.merge(validate_symmetric(T.plus_pair(), require_poincare), "(i+, (dphi+, phi)): ");
  rep.merge(validate_symmetric(T.minus_pair(), require_poincare), "(i-, (dphi-, -phi)): ");
  if (!rep.ok()) return rep;
  SymmetricPair<R> P = T.glued_pair();
  rep.merge(validate_symmetric(P, require_poincare), "glued pair: ");
  return rep;
}

}  // namespace kc
