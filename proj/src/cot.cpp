#include "kc/cot.hpp"

#include <set>

#include "kc/snf.hpp"

namespace kc {

GammaElement gamma_identity() { return {}; }

GammaElement gamma_mul(const GammaElement& x, const GammaElement& y) {
  return {x.n + y.n, x.a + y.a.times(LaurentPoly::t(x.n))};
}

GammaElement gamma_inv(const GammaElement& x) { return {-x.n, -x.a.times(LaurentPoly::t(-x.n))}; }

std::string gamma_str(const GammaElement& x) { return "(" + std::to_string(x.n) + ", " + x.a.str() + ")"; }

GammaRingElement::GammaRingElement(const Rat& c) {
  if (c != 0) terms_[gamma_identity()] = c;
}

GammaRingElement GammaRingElement::group(const GammaElement& g, const Rat& c) {
  GammaRingElement x;
  x.add_term(g, c);
  return x;
}

GammaRingElement GammaRingElement::from_laurent(const LaurentPoly& p) {
  GammaRingElement x;
  for (const auto& [e, c] : p.terms()) x.add_term({e, TorsionClass()}, c);
  return x;
}

void GammaRingElement::add_term(const GammaElement& g, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool GammaRingElement::in_meridian_subring() const {
  for (const auto& [g, c] : terms_)
    if (!g.a.is_zero()) return false;
  return true;
}

GammaRingElement GammaRingElement::involute() const {
  GammaRingElement x;
  for (const auto& [g, c] : terms_) x.add_term(gamma_inv(g), c);
  return x;
}

std::string GammaRingElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + gamma_str(g);
  }
  return s;
}

GammaRingElement& GammaRingElement::operator+=(const GammaRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GammaRingElement& GammaRingElement::operator-=(const GammaRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GammaRingElement operator*(const GammaRingElement& a, const GammaRingElement& b) {
  GammaRingElement x;
  for (const auto& [g, c] : a.terms_)
    for (const auto& [h, d] : b.terms_) x.add_term(gamma_mul(g, h), c * d);
  return x;
}

GammaRingElement GammaRingElement::operator-() const {
  GammaRingElement x = *this;
  for (auto& [g, c] : x.terms_) c = -c;
  return x;
}

LaurentPoly gamma_to_QZ(const QGamma& x) {
  LaurentPoly p;
  for (const auto& [g, c] : x.terms()) p += LaurentPoly::monomial(c, g.n);
  return p;
}

Rat gamma_to_Q(const QGamma& x) {
  Rat s(0);
  for (const auto& [g, c] : x.terms()) s += c;
  return s;
}

std::optional<Int> level_Z(const QGamma& x) {
  for (const auto& [g, c] : x.terms())
    if (c.get_den() != 1) return std::nullopt;
  return level_Z(gamma_to_Q(x));
}

GammaElement Representation::operator()(const GroupElement& g) const { return {g.n, form(g.h, p)}; }

QGamma Representation::operator()(const GRE& x) const {
  QGamma y;
  for (const auto& [g, c] : x.terms()) y += QGamma::group((*this)(g), c);
  return y;
}

Representation rho_from_form(ModulePtr H, const BlanchfieldForm& F, const ModuleElement& p) {
  if (H->size() != F.size()) throw std::invalid_argument("representation: form does not live on the module");
  return {std::move(H), p, F};
}

Representation rho_from_p(const KnotTriple& T, const ModuleElement& p) {
  return rho_from_form(T.H, chain_blanchfield(zero_surgery(T)), p);
}

ChainComplex<QGamma> induce_over_gamma(const ChainComplex<GRE>& C, const Representation& rho) {
  return change_coefficients(C, QGamma(), [&](const GRE& x) { return rho(x); });
}

GammaMap induce_over_gamma(const GMap& f, const Representation& rho) {
  return change_coefficients(f, QGamma(), [&](const GRE& x) { return rho(x); });
}

GammaComplex induce_over_gamma(const ZeroSurgeryComplex& Z, const Representation& rho) {
  GammaComplex N;
  N.C = induce_over_gamma(Z.N.C, rho);
  N.phi = change_coefficients(Z.N.phi, N.C, [&](const GRE& x) { return rho(x); });
  return N;
}

ChainComplex<LaurentPoly> augment_to_QZ(const ChainComplex<QGamma>& C) {
  return change_coefficients(C, LaurentPoly(), [](const QGamma& x) { return gamma_to_QZ(x); });
}

ContractibilityCertificate certify_contractible_over_K(const ChainComplex<QGamma>& N, const GammaMap& f_minus) {
  if (!(f_minus.target() == N)) throw std::invalid_argument("certificate: f- does not land in the complex");
  const auto& D = f_minus.source();
  const Matrix<QGamma> d1 = D.d(1);
  if (d1.rows() != 1 || d1.cols() != 1) throw std::invalid_argument("certificate: f- is not defined on a circle");
  const QGamma g = d1(0, 0) + QGamma(Rat(1));
  if (d1(0, 0).is_zero() || g.terms().size() != 1 || g.terms().begin()->second != 1)
    throw CertificateUnavailable("meridian maps to the identity of Gamma, so t - 1 is not invertible");
  ContractibilityCertificate cert;
  cert.meridian_image = gamma_str(g.terms().begin()->first);
  cert.cone_Q = homology(complex_Q(mapping_cone(f_minus)));
  std::string failing;
  for (int k : {0, 1}) {
    DegreeHomology h = cert.cone_Q.at(k);
    if (h.free_rank != 0 || !h.torsion.empty())
      failing += (failing.empty() ? "" : ", ") + std::string("H_") + std::to_string(k) + " = Q^" +
                 std::to_string(h.free_rank);
  }
  if (!failing.empty()) throw CertificateUnavailable("rational cone homology nonzero: " + failing);
  return cert;
}

namespace {

QGamma lift(const LaurentPoly& p) { return QGamma::from_laurent(p); }

bool in_meridian_subring(const ChainComplex<QGamma>& C) {
  for (const auto& [r, m] : C.boundaries())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).in_meridian_subring()) return false;
  return true;
}

Matrix<Rat> rows_of(const std::vector<std::vector<Rat>>& v, std::size_t cols) {
  Matrix<Rat> m(v.size(), cols, Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i][j];
  return m;
}

std::size_t rank_Q(const Matrix<Rat>& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : snf(m).rank; }

}  // namespace

OneSolution product_solution(const KnotTriple& T, const Representation& rho) {
  ZeroSurgeryComplex Z = zero_surgery(T);
  GammaComplex Np = induce_over_gamma(Z, rho);
  ChainComplex<QGamma> V = induce_over_gamma(T.triad.Dm, rho);
  if (!in_meridian_subring(Np.C) || !in_meridian_subring(V))
    throw std::invalid_argument("product solution needs the induced complex inside the meridian subring");
  ChainComplex<LaurentPoly> N = augment_to_QZ(Np.C);
  const LaurentPoly c = gamma_to_QZ(V.d(1)(0, 0));
  GammaMap fm = induce_over_gamma(Z.f_minus, rho);
  const std::size_t n0 = N.rank(0), n1 = N.rank(1), n2 = N.rank(2);
  const Matrix<LaurentPoly> d1 = N.d(1), d2 = N.d(2);
  const Matrix<LaurentPoly> f0 = map_entries(fm.at(0), LaurentPoly(), gamma_to_QZ);
  const Matrix<LaurentPoly> f1 = map_entries(fm.at(1), LaurentPoly(), gamma_to_QZ);
  // unknowns (j_0, j_1, h); equations d_1 j_0 = j_1 c, d_2 j_1 = 0, f j - 1 = h d + d h
  Matrix<LaurentPoly> M(n0 + n1 + 1, n1 + n2 + 2, LaurentPoly());
  std::vector<LaurentPoly> rhs(M.cols());
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n0; ++b) M(b, a) = d1(a, b);
    M(n0 + a, a) = -c;
  }
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n1; ++b) M(n0 + b, n1 + a) = d2(a, b);
  const std::size_t e0 = n1 + n2, e1 = e0 + 1, h = n0 + n1;
  for (std::size_t b = 0; b < n0; ++b) M(b, e0) = f0(0, b);
  for (std::size_t b = 0; b < n1; ++b) M(n0 + b, e1) = f1(0, b);
  M(h, e0) = -c;
  M(h, e1) = -c;
  rhs[e0] = rhs[e1] = LaurentPoly(1);
  auto u = solve_row(M, rhs);
  if (!u) throw std::invalid_argument("product solution: no retraction onto the meridian circle");
  OneSolution S;
  S.V = V;
  S.j = GammaMap(Np.C, V);
  Matrix<QGamma> j0(n0, 1, QGamma()), j1(n1, 1, QGamma());
  for (std::size_t b = 0; b < n0; ++b) j0(b, 0) = lift((*u)[b]);
  for (std::size_t b = 0; b < n1; ++b) j1(b, 0) = lift((*u)[n0 + b]);
  S.j.set(0, j0);
  S.j.set(1, j1);
  S.Theta = SymmetricStructure<QGamma>(4);
  return S;
}

Report validate_algebraic_one_solution(const KnotTriple& T, const Representation& rho, const OneSolution& S) {
  Report rep;
  ZeroSurgeryComplex Z = zero_surgery(T);
  GammaComplex Np = induce_over_gamma(Z, rho);
  if (!(S.j.source() == Np.C) || !(S.j.target() == S.V)) {
    rep.add("j shape", false, "j is not a map from the induced zero surgery to V");
    return rep;
  }
  rep.merge(validate_chain_map(S.j), "j: ");
  if (rep.ok()) {
    SymmetricPair<QGamma> P{S.j, S.Theta, Np.phi};
    rep.merge(validate_symmetric(P), "pair: ");
  }

  // j_*: H_1(Q (x) N) -> H_1(Q (x) V)
  {
    ChainComplex<Rat> NQ = complex_Q(Np.C), VQ = complex_Q(S.V);
    Matrix<Rat> j1 = map_entries(S.j.at(1), Rat(0), [](const QGamma& x) { return gamma_to_Q(x); });
    auto hn = homology_presentation(NQ, 1);
    auto hv = homology_presentation(VQ, 1);
    const std::size_t dn = hn.k() - hn.factors.size(), dv = hv.k() - hv.factors.size();
    bool iso = dn == dv;
    if (iso && dn > 0) {
      Matrix<Rat> m(dn, dv, Rat(0));
      for (std::size_t a = 0; a < dn; ++a) {
        std::vector<Rat> c = hv.class_coords(vec_mat(hn.generator(hn.factors.size() + a), j1));
        for (std::size_t b = 0; b < dv; ++b) m(a, b) = c[hv.factors.size() + b];
      }
      iso = rank_Q(m) == dn;
    }
    rep.add("H_1(Q) isomorphism", iso,
            iso ? "" : "H_1(Q (x) N) = Q^" + std::to_string(dn) + ", H_1(Q (x) V) = Q^" + std::to_string(dv));
  }

  // kernel of H -> H_1(Q[Z] (x) V) against the supplied metaboliser
  const AlexanderModule& H = *T.H;
  ChainComplex<LaurentPoly> VZ = augment_to_QZ(S.V);
  Matrix<LaurentPoly> j1 = map_entries(S.j.at(1), LaurentPoly(), gamma_to_QZ);
  auto hv = homology_presentation(VZ, 1);
  std::vector<std::vector<LaurentPoly>> images;
  for (std::size_t i = 0; i < H.size(); ++i)
    for (long e = 0; e < H.factor(i).span(); ++e)
      images.push_back(hv.class_coords(vec_mat(vec_scale(LaurentPoly::t(e), Z.xi.at(i)), j1)));
  std::vector<std::vector<Rat>> lin(images.size());
  for (std::size_t c = 0; c < hv.k(); ++c) {
    if (c < hv.factors.size()) {
      const LaurentPoly& f = hv.factors[c];
      for (std::size_t b = 0; b < images.size(); ++b) {
        LaurentPoly r = reduce_mod(images[b][c], f);
        for (long e = 0; e < f.span(); ++e) lin[b].push_back(r.coeff(e));
      }
    } else {
      std::set<long> exps;
      for (const auto& im : images)
        for (const auto& [e, x] : im[c].terms()) exps.insert(e);
      for (std::size_t b = 0; b < images.size(); ++b)
        for (long e : exps) lin[b].push_back(images[b][c].coeff(e));
    }
  }
  const std::size_t d = H.q_dimension();
  const std::size_t width = lin.empty() ? 0 : lin[0].size();
  Matrix<Rat> ker = (d == 0) ? Matrix<Rat>(0, 0, Rat(0))
                    : (width == 0 ? Matrix<Rat>::identity(d, Rat(0)) : left_kernel(rows_of(lin, width)));
  std::vector<std::vector<Rat>> prow;
  for (const auto& g : S.P.generators)
    for (std::size_t e = 0; e < d; ++e) prow.push_back(H.q_coords(H.act(LaurentPoly::t(static_cast<long>(e)), g)));
  Matrix<Rat> PM = rows_of(prow, d);
  const std::size_t dk = rank_Q(ker), dp = rank_Q(PM);
  const bool same = dk == dp && (d == 0 || rank_Q(Matrix<Rat>::vcat(ker.rows() ? ker : Matrix<Rat>(0, d, Rat(0)),
                                                                    PM.rows() ? PM : Matrix<Rat>(0, d, Rat(0)))) == dk);
  rep.add("kernel equals P", same, same ? "" : "dim ker = " + std::to_string(dk) + ", dim P = " + std::to_string(dp));
  std::vector<std::vector<Rat>> with_p = prow;
  with_p.push_back(H.q_coords(rho.p));
  const bool contains = d == 0 || rank_Q(rows_of(with_p, d)) == dp;
  rep.add("P contains p", contains, contains ? "" : "p = " + H.str(rho.p) + " is not in P");
  if (d > 0) {
    Report mp = verify_metaboliser(rho.form, S.P);
    rep.merge(mp, "P metaboliser: ");
  }
  return rep;
}

CotFamily assemble_cot_family(const KnotTriple& T, long scalar_bound) {
  CotFamily fam;
  fam.label = T.label;
  ZeroSurgeryComplex Z = zero_surgery(T);
  fam.form = chain_blanchfield(Z);
  fam.decision = is_metabolic(fam.form);
  if (fam.decision.metaboliser) fam.metabolisers.push_back(*fam.decision.metaboliser);
  fam.no_metaboliser = fam.decision.kind == MetabolicDecision::Kind::No;
  const AlexanderModule& H = *T.H;
  std::vector<ModuleElement> ps{H.zero()};
  for (std::size_t i = 0; i < H.size(); ++i)
    for (long c = 1; c <= scalar_bound; ++c) {
      ModuleElement g = H.act(LaurentPoly(Rat(c)), H.gen(i));
      if (!g.is_zero()) ps.push_back(g);
    }
  const std::size_t dimH = H.q_dimension();
  for (const auto& p : ps) {
    CotEntry e;
    e.p = p;
    Representation rho = rho_from_form(T.H, fam.form, p);
    e.N = induce_over_gamma(Z, rho);
    try {
      e.certificate = certify_contractible_over_K(e.N.C, induce_over_gamma(Z.f_minus, rho));
    } catch (const CertificateUnavailable& ex) {
      e.refusal = ex.what();
    }
    for (const auto& P : fam.metabolisers) {
      std::vector<ModuleElement> gens = P.generators;
      const std::size_t base = span_dimension(*fam.form.module, gens);
      gens.push_back(p);
      e.in_metaboliser.push_back(dimH == 0 || span_dimension(*fam.form.module, gens) == base);
    }
    fam.entries.push_back(std::move(e));
  }
  fam.p0_compatible = augment_to_QZ(fam.entries.front().N.C) == *complex_QZ(Z.N.C);
  return fam;
}

}  // namespace kc
