#include "kc/concordance.hpp"

#include <stdexcept>

namespace kc {

namespace {

GRE el(const ModulePtr& H, const GroupElement& g, const Rat& c = Rat(1)) { return GRE::group(H, g, c); }
GRE one(const ModulePtr& H) { return GRE(H, Rat(1)); }
GRE zero(const ModulePtr& H) { return GRE(H); }

Matrix<GRE> mat(const ModulePtr& H, std::size_t r, std::size_t c, const std::vector<GRE>& entries) {
  Matrix<GRE> m(r, c, zero(H));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entries[i * c + j];
  return m;
}

GMap constant_map(const GComplex& A, const GComplex& B, const Matrix<GRE>& m) {
  GMap f(A, B);
  for (const auto& [r, k] : A.ranks()) {
    (void)k;
    if (B.rank(r) > 0) f.set(r, m);
  }
  return f;
}

GStructure zero_structure(int n) { return GStructure(n); }

// Component-wise coefficient change of a whole structure.
GStructure induce(const GStructure& phi, const GComplex& target, const RingMap& m) {
  return change_coefficients(phi, target, [&](const GRE& x) { return m.apply(x); });
}

}  // namespace

GComplex circle_complex(ModulePtr H, const GroupElement& g) {
  GComplex D(zero(H));
  D.set_rank(0, 1);
  D.set_rank(1, 1);
  D.set_d(1, mat(H, 1, 1, {el(H, g) - one(H)}));
  return D;
}

ModelBoundary model_boundary(ModulePtr H, const GroupElement& g1, const GroupElement& la) {
  ModelBoundary m;
  m.H = H;
  m.g1 = g1;
  m.la = la;
  const GroupElement lai = group_inv(*H, la);
  m.gq = group_mul(*H, group_mul(*H, lai, g1), la);
  const GRE z = zero(H), u = one(H);
  const GRE G1 = el(H, g1), GQ = el(H, m.gq), LA = el(H, la), LAI = el(H, lai);

  m.C = GComplex(z);
  m.C.set_rank(0, 2);
  m.C.set_rank(1, 2);
  m.C.set_d(1, mat(H, 2, 2, {G1 - u, z, z, GQ - u}));
  m.phi = GStructure(1);
  m.phi.set(m.C, 0, 0, mat(H, 2, 2, {G1, z, z, -GQ}));
  m.phi.set(m.C, 0, 1, mat(H, 2, 2, {u, z, z, -u}));
  m.phi.set(m.C, 1, 1, mat(H, 2, 2, {u, z, z, -u}));

  m.Dm = circle_complex(H, g1);
  m.Dp = circle_complex(H, m.gq);
  m.im = constant_map(m.C, m.Dm, mat(H, 2, 1, {u, LAI}));
  m.ip = constant_map(m.C, m.Dp, mat(H, 2, 1, {LA, u}));
  m.varpi = constant_map(m.Dm, m.Dp, mat(H, 1, 1, {LA}));
  m.varsigma = constant_map(m.C, m.C, mat(H, 2, 2, {z, LA, LAI, z}));
  return m;
}

namespace {

GTriad model_triad(const ModelBoundary& m) {
  GTriad T;
  T.C = m.C;
  T.Dm = m.Dm;
  T.Dp = m.Dp;
  T.im = m.im;
  T.ip = m.ip;
  T.phi = m.phi;
  T.dphim = zero_structure(2);
  T.dphip = zero_structure(2);
  T.Phi = zero_structure(3);
  return T;
}

}  // namespace

KnotTriple unknot_triple_over(ModulePtr H, const GroupElement& g1) {
  KnotTriple K;
  K.H = H;
  K.g1 = g1;
  K.la = group_identity(*H);
  ModelBoundary m = K.model();
  K.triad = model_triad(m);
  K.triad.Y = m.Dm;
  K.triad.fm = GMap::identity(m.Dm);
  K.triad.fp = constant_map(m.Dp, m.Dm, mat(H, 1, 1, {one(H)}));
  K.triad.g = GMap::zero(m.C, m.Dm, 1);
  K.mu = GMap::zero(m.Dm, m.Dm, 1);
  K.label = "unknot";
  return K;
}

KnotTriple unknot_triple() {
  ModulePtr H = AlexanderModule::trivial();
  return unknot_triple_over(H, meridian(*H));
}

LaurentPoly symmetrize(const LaurentPoly& p) {
  if (p.is_zero() || p.span() % 2 != 0) throw std::invalid_argument("no symmetric representative of " + p.str());
  LaurentPoly q = p.shift(-(p.min_exp() + p.span() / 2));
  if (q.involute() == q) return q;
  if (q.involute() == -q) throw std::invalid_argument("factor is skew-symmetric: " + p.str());
  throw std::invalid_argument("factor is not symmetric up to units: " + p.str());
}

KnotTriple split_triple(const std::vector<LaurentPoly>& deltas, const std::vector<LaurentPoly>& h1,
                        const std::vector<LaurentPoly>& la_h, const std::string& label) {
  ModulePtr H = validate_module(deltas);
  KnotTriple K;
  K.H = H;
  K.g1 = GroupElement{1, h1.empty() ? H->zero() : H->element(h1)};
  K.la = GroupElement{0, la_h.empty() ? H->zero() : H->element(la_h)};
  K.label = label;
  ModelBoundary m = K.model();
  K.triad = model_triad(m);

  // A = boundary of the rank-one 4-dimensional complex with phi_0 = symmetrized factor.
  GComplex A(zero(H));
  GStructure phiA(3);
  for (const auto& p : deltas) {
    GComplex X(zero(H));
    X.set_rank(2, 1);
    GStructure phiX(4);
    phiX.set(X, 0, 2, mat(H, 1, 1, {GRE::from_laurent(H, symmetrize(p))}));
    SymmetricComplex<GRE> dX = boundary_construction(SymmetricComplex<GRE>{X, phiX});
    GStructure next = direct_sum(A, phiA, dX.C, dX.phi);
    A = direct_sum(A, dX.C);
    phiA = next;
  }
  GComplex Y = direct_sum(m.Dm, A);
  K.triad.Y = Y;
  K.triad.Phi = direct_sum(m.Dm, zero_structure(3), A, phiA);

  const GroupElement lai = group_inv(*H, K.la);
  K.triad.fm = GMap(m.Dm, Y);
  K.triad.fp = GMap(m.Dp, Y);
  for (int r : {0, 1}) {
    Matrix<GRE> inc(1, Y.rank(r), zero(H));
    inc(0, 0) = one(H);
    K.triad.fm.set(r, inc);
    inc(0, 0) = el(H, lai);
    K.triad.fp.set(r, inc);
  }
  K.triad.g = GMap::zero(m.C, Y, 1);
  K.mu = GMap::zero(m.Dm, Y, 1);

  // xi_i: the degree-1 generator of the i-th boundary summand
  const std::size_t n1 = Y.rank(1);
  std::size_t pos = m.Dm.rank(1);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    QZVector v(n1, LaurentPoly());
    v[pos] = LaurentPoly(1);
    K.xi.push_back(v);
    pos += 1;
  }
  return K;
}

KnotTriple induce_triple(const KnotTriple& T, const RingMap& m) {
  KnotTriple K;
  K.H = m.target();
  K.g1 = m.apply(T.g1);
  K.la = m.apply(T.la);
  K.label = T.label;
  K.xi = T.xi;
  const GTriad& a = T.triad;
  GTriad& b = K.triad;
  b.C = change_coefficients(a.C, m);
  b.Dm = change_coefficients(a.Dm, m);
  b.Dp = change_coefficients(a.Dp, m);
  b.Y = change_coefficients(a.Y, m);
  b.im = change_coefficients(a.im, m);
  b.ip = change_coefficients(a.ip, m);
  b.fm = change_coefficients(a.fm, m);
  b.fp = change_coefficients(a.fp, m);
  b.g = change_coefficients(a.g, m);
  b.phi = induce(a.phi, b.C, m);
  b.dphim = induce(a.dphim, b.Dm, m);
  b.dphip = induce(a.dphip, b.Dp, m);
  b.Phi = induce(a.Phi, b.Y, m);
  K.mu = change_coefficients(T.mu, m);
  return K;
}

KnotTriple conjugate_triple(const KnotTriple& T, const GroupElement& c) {
  return induce_triple(T, inner_auto(T.H, c));
}

KnotTriple normalize_meridian(const KnotTriple& T) {
  if (T.g1.n != 1) throw std::invalid_argument("meridian must have Z-component 1");
  if (T.g1.h.is_zero()) return T;
  GroupElement c{0, T.H->one_minus_t_inverse(T.g1.h)};
  return conjugate_triple(T, c);
}

KnotTriple connected_sum(const KnotTriple& A0, const KnotTriple& B0) {
  ModulePtr Hs = AlexanderModule::direct_sum(*A0.H, *B0.H);
  KnotTriple a = induce_triple(normalize_meridian(A0), induce_hom(ModuleHom::inclusion_first(A0.H, Hs)));
  KnotTriple b = induce_triple(normalize_meridian(B0), induce_hom(ModuleHom::inclusion_second(B0.H, Hs)));
  const GRE z = zero(Hs), u = one(Hs);

  KnotTriple K;
  K.H = Hs;
  K.g1 = a.g1;
  K.la = b.la;
  K.label = A0.label + " # " + B0.label;
  const GTriad& ta = a.triad;
  const GTriad& tb = b.triad;
  GTriad& t = K.triad;

  const GRE x = el(Hs, group_mul(*Hs, group_inv(*Hs, b.la), a.la));
  GMap nu = constant_map(tb.C, ta.C, mat(Hs, 2, 2, {u, z, z, x}));

  t.C = tb.C;
  t.phi = tb.phi;
  t.Dm = ta.Dm;
  t.Dp = tb.Dp;
  t.ip = tb.ip;
  t.im = nu.then(ta.im);
  t.dphim = zero_structure(2);
  t.dphip = zero_structure(2);

  const GComplex& Dm = ta.Dm;
  GMap fpw = a.model().varpi.then(ta.fp);
  auto layout = [&](int r) { return BlockLayout({ta.Y.rank(r), Dm.rank(r - 1), tb.Y.rank(r)}); };
  GComplex Y(z);
  for (int r = 0; r <= 4; ++r) Y.set_rank(r, layout(r).total());
  for (int r = 0; r <= 4; ++r) {
    BlockMatrix<GRE> d(layout(r), layout(r - 1), z);
    d.set(0, 0, ta.Y.d(r));
    d.set(1, 0, fpw.at(r - 1).signed_by(sign_pow(r)));
    d.set(1, 1, Dm.d(r - 1));
    d.set(1, 2, tb.fm.at(r - 1).signed_by(sign_pow(r - 1)));
    d.set(2, 2, tb.Y.d(r));
    Y.set_d(r, d.matrix());
  }
  t.Y = Y;

  t.fm = GMap(Dm, Y);
  t.fp = GMap(tb.Dp, Y);
  K.mu = GMap(Dm, Y, 1);
  for (int r : {0, 1}) {
    BlockMatrix<GRE> fm(BlockLayout({Dm.rank(r)}), layout(r), z);
    fm.set(0, 0, ta.fm.at(r));
    t.fm.set(r, fm.matrix());
    BlockMatrix<GRE> fp(BlockLayout({tb.Dp.rank(r)}), layout(r), z);
    fp.set(0, 2, tb.fp.at(r));
    t.fp.set(r, fp.matrix());
    BlockMatrix<GRE> mu(BlockLayout({Dm.rank(r)}), layout(r + 1), z);
    mu.set(0, 0, a.mu.at(r));
    mu.set(0, 1, Dm.id(r).signed_by(sign_pow(r)));
    mu.set(0, 2, b.mu.at(r));
    K.mu.set(r, mu.matrix());
  }

  t.g = GMap(t.C, Y, 1);
  for (int r : {0, 1}) {
    BlockMatrix<GRE> g(BlockLayout({t.C.rank(r)}), layout(r + 1), z);
    g.set(0, 0, nu.at(r) * ta.g.at(r));
    g.set(0, 1, tb.im.at(r).signed_by(sign_pow(r + 1)));
    g.set(0, 2, tb.g.at(r));
    t.g.set(r, g.matrix());
  }

  t.Phi = GStructure(3);
  const int smax = std::max(ta.Phi.max_s(), tb.Phi.max_s());
  for (int s = 0; s <= smax; ++s)
    for (const auto& [r, k] : Y.ranks()) {
      (void)k;
      BlockMatrix<GRE> p(layout(3 - r + s), layout(r), z);
      p.set(0, 0, ta.Phi.at(ta.Y, s, r));
      p.set(2, 2, tb.Phi.at(tb.Y, s, r));
      t.Phi.set(Y, s, r, p.matrix());
    }

  const std::size_t off = ta.Y.rank(1) + Dm.rank(0);
  const std::size_t n1 = Y.rank(1);
  for (const auto& v : a.xi) {
    QZVector w(n1, LaurentPoly());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
    K.xi.push_back(w);
  }
  for (const auto& v : b.xi) {
    QZVector w(n1, LaurentPoly());
    for (std::size_t i = 0; i < v.size(); ++i) w[off + i] = v[i];
    K.xi.push_back(w);
  }
  return K;
}

KnotTriple invert_triple(const KnotTriple& T) {
  KnotTriple K = T;
  K.label = "-(" + T.label + ")";
  K.triad.Phi = T.triad.Phi.negated();
  K.triad.g = T.model().varsigma.then(T.triad.g);
  return K;
}

SymmetricPair<GRE> BoundaryTorus::pair() const { return {eta, Phi, E.phi}; }

SymmetricComplex<GRE> model_torus(const ModelBoundary& m) {
  SymmetricPair<GRE> minus{m.im, zero_structure(2), m.phi.negated()};
  SymmetricPair<GRE> plus{m.ip, zero_structure(2), m.phi};
  return union_pairs(minus, plus);
}

BoundaryTorus boundary_torus(const KnotTriple& T) {
  return {T.triad.glued_boundary(), T.triad.glued_map(), T.triad.Phi};
}

GMap varpi_E(const SymmetricComplex<GRE>& E, const SymmetricComplex<GRE>& E2, const GroupElement& la,
             const GroupElement& la2) {
  const ModulePtr& H = E.C.zero().module();
  const GRE z = zero(H), u = one(H);
  const GRE x = el(H, group_mul(*H, group_inv(*H, la), la2));
  GMap w(E.C, E2.C);
  // E_r = D-_r + C_{r-1} + D+_r with ranks (0,2,0), (1,2,1), (1,0,1)
  w.set(2, Matrix<GRE>::diagonal({u, x}, z));
  w.set(1, Matrix<GRE>::diagonal({u, u, x, x}, z));
  w.set(0, Matrix<GRE>::diagonal({u, x}, z));
  return w;
}

ModelMatrices model_matrices(ModulePtr H, const GroupElement& g1, const GroupElement& la, const GroupElement& la2) {
  ModelMatrices M;
  M.m = model_boundary(H, g1, la);
  M.E = model_torus(M.m);
  M.E2 = model_torus(model_boundary(H, g1, la2));
  M.wE = varpi_E(M.E, M.E2, la, la2);
  return M;
}

Report validate_model_matrices(const ModelMatrices& M) {
  const ModelBoundary& m = M.m;
  Report rep;
  auto ends = [&](const std::string& name, const GMap& f, const GComplex& a, const GComplex& b) {
    rep.add(name + " endpoints", f.source() == a && f.target() == b, "source or target differs from the model");
  };
  ends("i-", m.im, m.C, m.Dm);
  ends("i+", m.ip, m.C, m.Dp);
  ends("varpi", m.varpi, m.Dm, m.Dp);
  ends("varsigma", m.varsigma, m.C, m.C);
  ends("varpi_E", M.wE, M.E.C, M.E2.C);
  rep.merge(validate_complex(m.C), "C: ");
  rep.merge(validate_complex(m.Dm), "D-: ");
  rep.merge(validate_complex(m.Dp), "D+: ");
  rep.merge(validate_symmetric(SymmetricComplex<GRE>{m.C, m.phi}), "phi: ");
  rep.merge(validate_chain_map(m.im), "i-: ");
  rep.merge(validate_chain_map(m.ip), "i+: ");
  rep.merge(validate_pair_relations(SymmetricPair<GRE>{m.im, zero_structure(2), m.phi.negated()}), "(i-, -phi): ");
  rep.merge(validate_pair_relations(SymmetricPair<GRE>{m.ip, zero_structure(2), m.phi}), "(i+, phi): ");
  rep.merge(validate_chain_map(m.varpi), "varpi: ");
  rep.add("i- varpi = i+", m.im.then(m.varpi) == m.ip);
  rep.merge(validate_chain_map(m.varsigma), "varsigma: ");
  rep.add("varsigma phi varsigma* = -phi", push_structure(m.varsigma, m.phi) == m.phi.negated());
  rep.merge(validate_symmetric(M.E), "E: ");
  rep.merge(validate_symmetric(M.E2), "E2: ");
  rep.merge(validate_chain_map(M.wE), "varpi_E: ");
  rep.add("varpi_E phi varpi_E* = phi'", push_structure(M.wE, M.E.phi) == M.E2.phi);
  return rep;
}

namespace {

template <class F>
void visit_complex(const std::string& name, GComplex& C, F& f) {
  const auto ds = C.boundaries();
  for (auto [r, x] : ds) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        f(name + ".d" + std::to_string(r) + "[" + std::to_string(i) + "," + std::to_string(j) + "]", x(i, j));
    C.set_d(r, x);
  }
}

template <class F>
void visit_structure(const std::string& name, const GComplex& C, GStructure& phi, F& f) {
  const auto cs = phi.components();
  for (const auto& [s, comps] : cs)
    for (auto [r, x] : comps) {
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
          f(name + "_" + std::to_string(s) + "," + std::to_string(r) + "[" + std::to_string(i) + "," +
                std::to_string(j) + "]",
            x(i, j));
      phi.set(C, s, r, x);
    }
}

template <class F>
void visit_map(const std::string& name, GMap& g, F& f) {
  const auto cs = g.components();
  for (auto [r, x] : cs) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        f(name + "_" + std::to_string(r) + "[" + std::to_string(i) + "," + std::to_string(j) + "]", x(i, j));
    g.set(r, x);
  }
}

template <class F>
void visit_model(ModelMatrices& M, F& f) {
  visit_complex("C", M.m.C, f);
  visit_complex("D-", M.m.Dm, f);
  visit_complex("D+", M.m.Dp, f);
  visit_structure("phi", M.m.C, M.m.phi, f);
  visit_map("i-", M.m.im, f);
  visit_map("i+", M.m.ip, f);
  visit_map("varpi", M.m.varpi, f);
  visit_map("varsigma", M.m.varsigma, f);
  visit_complex("E", M.E.C, f);
  visit_structure("phiE", M.E.C, M.E.phi, f);
  visit_complex("E2", M.E2.C, f);
  visit_structure("phiE2", M.E2.C, M.E2.phi, f);
  visit_map("varpi_E", M.wE, f);
}

}  // namespace

std::vector<std::string> model_entry_names(const ModelMatrices& M) {
  ModelMatrices copy = M;
  std::vector<std::string> names;
  auto f = [&](const std::string& n, GRE&) { names.push_back(n); };
  visit_model(copy, f);
  return names;
}

ModelMatrices mutate_model_entry(const ModelMatrices& M, std::size_t k, const GRE& delta) {
  ModelMatrices out = M;
  std::size_t i = 0;
  auto f = [&](const std::string&, GRE& x) {
    if (i++ == k) x += delta;
  };
  visit_model(out, f);
  if (k >= i) throw std::out_of_range("model entry index out of range");
  return out;
}

ZeroSurgeryComplex zero_surgery(const KnotTriple& T) {
  const ModulePtr& H = T.H;
  const GRE z = zero(H);
  KnotTriple U = unknot_triple_over(H, T.g1);
  SymmetricComplex<GRE> E = T.triad.glued_boundary();
  SymmetricComplex<GRE> EU = U.triad.glued_boundary();
  GMap eta = T.triad.glued_map();
  GMap etaU = U.triad.glued_map();
  GMap w = varpi_E(EU, E, U.la, T.la);

  GComplex S = direct_sum(E.C, EU.C);
  SymmetricPair<GRE> p1;
  p1.f = GMap(S, E.C);
  for (const auto& [r, k] : S.ranks()) {
    (void)k;
    p1.f.set(r, Matrix<GRE>::vcat(E.C.id(r), w.at(r)));
  }
  p1.dphi = zero_structure(3);
  p1.phi = direct_sum(E.C, E.phi.negated(), EU.C, EU.phi);

  SymmetricPair<GRE> p2;
  p2.f = direct_sum(eta, etaU);
  p2.dphi = direct_sum(T.triad.Y, T.triad.Phi, U.triad.Y, U.triad.Phi.negated());
  p2.phi = direct_sum(E.C, E.phi, EU.C, EU.phi.negated());

  ZeroSurgeryComplex Z;
  Z.H = H;
  Z.N = union_pairs(p1, p2);
  const GComplex& N = Z.N.C;
  const std::size_t yoff1 = E.C.rank(1) + S.rank(0);
  for (const auto& v : T.xi) {
    QZVector x(N.rank(1), LaurentPoly());
    for (std::size_t i = 0; i < v.size(); ++i) x[yoff1 + i] = v[i];
    Z.xi.push_back(x);
  }
  const GComplex& Dm = T.triad.Dm;
  Z.f_minus = GMap(Dm, N);
  for (int r : {0, 1}) {
    BlockMatrix<GRE> b(BlockLayout({Dm.rank(r)}), BlockLayout({E.C.rank(r), S.rank(r - 1), T.triad.Y.rank(r), U.triad.Y.rank(r)}), z);
    b.set(0, 2, T.triad.fm.at(r));
    Z.f_minus.set(r, b.matrix());
  }
  return Z;
}

Report check_Z_equivalence(const GMap& f, const std::string& name) {
  Report rep;
  auto K = complex_Z(mapping_cone(f));
  if (!K) {
    rep.add(name + " Z-homology equivalence", false, "map does not augment to Z");
    return rep;
  }
  HomologyReport h = homology(*K);
  rep.add(name + " Z-homology equivalence", h.is_zero(), h.is_zero() ? "" : "cone homology " + h.str());
  return rep;
}

Report check_consistency(const ModulePtr& H, const ChainComplex<LaurentPoly>& Y, const std::vector<QZVector>& xi) {
  Report rep;
  if (xi.size() != H->size()) {
    rep.add("consistency", false, "expected one cycle per generator of H");
    return rep;
  }
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i].size() != Y.rank(1) || !vec_is_zero(vec_mat(xi[i], Y.d(1)))) {
      rep.add("consistency", false, "xi_" + std::to_string(i) + " is not a degree-1 cycle");
      return rep;
    }
    for (const auto& c : xi[i])
      if (!c.is_integral()) {
        rep.add("consistency", false, "xi_" + std::to_string(i) + " is not integral");
        return rep;
      }
  }
  HomologyPresentation<LaurentPoly> hp = homology_presentation(Y, 1);
  if (hp.k() != hp.factors.size()) {
    rep.add("consistency", false, "H_1(Q[Z] (x) Y) has a free part");
    return rep;
  }
  // Q-coordinates of a class in H_1 = sum Q[t,t^-1]/(f_l)
  auto flatten = [&](const QZVector& x) {
    std::vector<Rat> out;
    std::vector<LaurentPoly> c = hp.class_coords(x);
    for (std::size_t l = 0; l < hp.factors.size(); ++l) {
      const LaurentPoly& f = hp.factors[l];
      if (f.is_unit()) continue;
      LaurentPoly res = reduce_mod(c[l], f);
      for (long e = 0; e < f.span(); ++e) out.push_back(res.coeff(e));
    }
    return out;
  };
  std::size_t dimH1 = 0;
  for (const auto& f : hp.factors)
    if (!f.is_unit()) dimH1 += static_cast<std::size_t>(f.span());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    std::vector<LaurentPoly> px(xi[i].size());
    for (std::size_t k = 0; k < px.size(); ++k) px[k] = H->factor(i) * xi[i][k];
    for (const auto& q : flatten(px))
      if (q != 0) {
        rep.add("consistency", false, "p_" + std::to_string(i) + " xi_" + std::to_string(i) + " is not a boundary");
        return rep;
      }
  }
  if (dimH1 != H->q_dimension()) {
    rep.add("consistency", false,
            "dim_Q H_1 = " + std::to_string(dimH1) + " but dim_Q H = " + std::to_string(H->q_dimension()));
    return rep;
  }
  Matrix<Rat> M(H->q_dimension(), dimH1, Rat(0));
  std::size_t row = 0;
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (long j = 0; j < H->factor(i).span(); ++j, ++row) {
      std::vector<LaurentPoly> v(xi[i].size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = LaurentPoly::t(j) * xi[i][k];
      auto q = flatten(v);
      for (std::size_t c = 0; c < q.size(); ++c) M(row, c) = q[c];
    }
  const bool iso = snf(M).rank == dimH1;
  rep.add("consistency", iso, iso ? "" : "cycles do not map H isomorphically onto H_1");
  return rep;
}

namespace {

bool integral_map(const GMap& f) {
  for (const auto& [r, m] : f.components())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_integral()) return false;
  return true;
}

bool integral_complex(const GComplex& C) {
  for (const auto& [r, m] : C.boundaries())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_integral()) return false;
  return true;
}

}  // namespace

Report validate_triple(const KnotTriple& T) {
  Report rep;
  const GTriad& t = T.triad;
  rep.add("meridian", T.g1.n == 1, T.g1.n == 1 ? "" : "g1 must have Z-component 1");
  rep.add("half longitude", T.la.n == 0, T.la.n == 0 ? "" : "l_a must lie in H");
  if (!rep.ok()) return rep;
  ModelBoundary m = T.model();
  const bool model = t.C == m.C && t.Dm == m.Dm && t.Dp == m.Dp && t.im == m.im && t.ip == m.ip && t.phi == m.phi &&
                     t.dphim.is_zero() && t.dphip.is_zero();
  rep.add("model boundary", model, model ? "" : "C, D+-, i+- or phi differ from the model for (g1, l_a)");
  const bool integral = integral_complex(t.Y) && integral_map(t.fm) && integral_map(t.fp) && integral_map(t.g) &&
                        integral_map(T.mu);
  rep.add("integral coefficients", integral);
  if (!rep.ok()) return rep;
  rep.merge(validate_triad(t));
  if (!rep.ok()) return rep;
  rep.merge(check_Z_equivalence(t.fm, "f-"));
  rep.merge(check_Z_equivalence(t.fp, "f+"));
  rep.merge(validate_homotopy(T.mu, m.varpi.then(t.fp), t.fm), "mu: ");
  if (!rep.ok()) return rep;
  rep.merge(check_consistency(T.H, *complex_QZ(t.Y), T.xi));
  return rep;
}

}  // namespace kc
