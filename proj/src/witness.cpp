#include "kc/witness.hpp"

#include <numeric>
#include <stdexcept>

namespace kc {

namespace {

GRE zero(const ModulePtr& H) { return GRE(H); }

// t^k c p with integer coprime coefficients, lowest exponent 0, positive leading coefficient
LaurentPoly primitive_associate(const LaurentPoly& p) {
  Int den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  LaurentPoly q = p.scaled(Rat(den));
  for (const auto& [e, c] : q.terms()) {
    (void)e;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  q = q.scaled(Rat(1) / Rat(num)).shift(-q.min_exp());
  if (q.lead() < 0) q = -q;
  return q;
}

GMap stack_maps(const GComplex& src, const GMap& a, const GMap& b, const GComplex& tgt, int shift) {
  GMap f(src, tgt, shift);
  for (const auto& [r, k] : src.ranks()) {
    (void)k;
    f.set(r, Matrix<GRE>::vcat(a.at(r), b.at(r)));
  }
  return f;
}

std::vector<LaurentPoly> qz_row(const Matrix<GRE>& m, const std::vector<LaurentPoly>& x) {
  Matrix<LaurentPoly> q = map_entries(m, LaurentPoly(), [](const GRE& v) { return augment_QZ(v); });
  return vec_mat(x, q);
}

// sum_k r_k(t) xi'_k for a module element with residues r_k
QZVector combine(const ModuleElement& e, const std::vector<QZVector>& xi, std::size_t len) {
  QZVector out(len, LaurentPoly());
  for (std::size_t k = 0; k < e.r.size() && k < xi.size(); ++k)
    for (std::size_t a = 0; a < len; ++a) out[a] += e.r[k] * xi[k][a];
  return out;
}

Report consistency_square(const KnotTriple& T, const ModuleHom& jflat, const GMap& j, const ChainComplex<LaurentPoly>& V,
                          const std::vector<QZVector>& xi, const std::string& name) {
  Report rep;
  for (std::size_t i = 0; i < T.xi.size(); ++i) {
    QZVector lhs = combine(jflat.images[i], xi, V.rank(1));
    QZVector rhs = qz_row(j.at(1), T.xi[i]);
    bool ok = false;
    try {
      ok = is_homologous(V, 1, lhs, rhs).value;
    } catch (const NotACycle&) {
      ok = false;
    }
    if (!ok) {
      rep.add("consistency square (" + name + ")", false, "fails on generator " + std::to_string(i));
      return rep;
    }
  }
  rep.add("consistency square (" + name + ")", true);
  return rep;
}

}  // namespace

GTriad witness_triad(const KnotTriple& T0, const KnotTriple& Td0, const ConcordanceWitness& W) {
  KnotTriple a = induce_triple(T0, induce_hom(W.jflat));
  KnotTriple b = induce_triple(Td0, induce_hom(W.jflat_dag));
  if (a.g1 != b.g1) throw BoundaryMismatch("meridians differ in H'");
  SymmetricComplex<GRE> E = a.triad.glued_boundary();
  SymmetricComplex<GRE> Ed = b.triad.glued_boundary();
  GMap eta = a.triad.glued_map();
  GMap etad = b.triad.glued_map();
  GMap w = varpi_E(Ed, E, b.la, a.la);

  GTriad t;
  t.C = direct_sum(E.C, Ed.C);
  t.phi = direct_sum(E.C, E.phi, Ed.C, Ed.phi.negated());
  t.Dm = E.C;
  t.im = GMap(t.C, E.C);
  for (const auto& [r, k] : t.C.ranks()) {
    (void)k;
    t.im.set(r, Matrix<GRE>::vcat(E.C.id(r), w.at(r)));
  }
  t.dphim = GStructure(3);
  t.Dp = direct_sum(a.triad.Y, b.triad.Y);
  t.ip = direct_sum(eta, etad);
  t.dphip = direct_sum(a.triad.Y, a.triad.Phi, b.triad.Y, b.triad.Phi.negated());
  t.Y = W.V;
  t.fm = W.delta;
  t.fp = stack_maps(t.Dp, W.j, W.j_dag, W.V, 0);
  t.g = stack_maps(t.C, W.gamma, W.gamma_dag, W.V, 1);
  t.Phi = W.Theta;
  return t;
}

Report validate_concordance_witness(const KnotTriple& T, const KnotTriple& Tdag, const ConcordanceWitness& W) {
  Report rep;
  const bool typeK = W.Hp && W.Hp->coefficients() == Coefficients::Z;
  rep.add("H' of type K", typeK, typeK ? "" : "H' must be a Z[t,t^-1]-module of type K");
  const bool maps = W.jflat.src && W.jflat.dst && W.jflat_dag.src && W.jflat_dag.dst &&
                    W.jflat.src->same_as(*T.H) && W.jflat_dag.src->same_as(*Tdag.H) &&
                    W.jflat.dst->same_as(*W.Hp) && W.jflat_dag.dst->same_as(*W.Hp);
  rep.add("module maps", maps, maps ? "" : "(j_flat, j_flat^dag) must map H + H^dag to H'");
  if (!rep.ok()) return rep;

  try {
    GTriad t = witness_triad(T, Tdag, W);
    rep.merge(validate_triad(t), "triad: ");
  } catch (const std::exception& e) {
    rep.add("triad", false, e.what());
  }

  // homological condition: j, j^dag induce Z-homology isomorphisms
  try {
    rep.merge(check_Z_equivalence(W.j, "j"));
    rep.merge(check_Z_equivalence(W.j_dag, "j^dag"));
  } catch (const std::exception& e) {
    rep.add("Z-homology condition", false, e.what());
  }

  // consistency
  auto VQ = complex_QZ(W.V);
  rep.merge(check_consistency(W.Hp, *VQ, W.xi), "xi': ");
  rep.merge(consistency_square(T, W.jflat, W.j, *VQ, W.xi, "T"));
  rep.merge(consistency_square(Tdag, W.jflat_dag, W.j_dag, *VQ, W.xi, "T^dag"));
  return rep;
}

ConcordanceWitness reflexive_witness(const KnotTriple& T) {
  ConcordanceWitness W;
  W.Hp = T.H;
  W.jflat = ModuleHom::identity(T.H);
  W.jflat_dag = ModuleHom::identity(T.H);
  W.V = T.triad.Y;
  W.Theta = GStructure(4);
  W.j = GMap::identity(T.triad.Y);
  W.j_dag = GMap::identity(T.triad.Y);
  W.delta = T.triad.glued_map();
  const GComplex& E = W.delta.source();
  W.gamma = GMap::zero(E, W.V, 1);
  W.gamma_dag = GMap::zero(E, W.V, 1);
  W.xi = T.xi;
  return W;
}

ModuleCokernel module_cokernel(const ModuleHom& a, const ModuleHom& b) {
  if (!a.src->same_as(*b.src)) throw std::invalid_argument("cokernel: maps have different sources");
  const AlexanderModule& A = *a.dst;
  const AlexanderModule& B = *b.dst;
  const std::size_t na = A.size(), nb = B.size(), m = na + nb;
  const std::size_t ns = a.src->size();
  Matrix<LaurentPoly> R(m + ns, m, LaurentPoly());
  for (std::size_t k = 0; k < na; ++k) R(k, k) = A.factor(k);
  for (std::size_t k = 0; k < nb; ++k) R(na + k, na + k) = B.factor(k);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t k = 0; k < na; ++k) R(m + i, k) = a.images[i].r[k];
    for (std::size_t k = 0; k < nb; ++k) R(m + i, na + k) = -b.images[i].r[k];
  }
  SnfResult<LaurentPoly> s = snf(R);
  // new generators f = V^-1 e; old generator e_k = sum_j V(k, j) f_j
  std::vector<std::size_t> kept;
  std::vector<LaurentPoly> factors;
  for (std::size_t j = 0; j < m; ++j) {
    LaurentPoly d = j < s.rank ? s.D(j, j) : LaurentPoly();
    if (d.is_zero()) throw TypeKViolation(j, "cokernel has a free summand");
    if (d.is_unit()) continue;
    kept.push_back(j);
    factors.push_back(primitive_associate(d));
  }
  ModuleCokernel out;
  out.M = factors.empty() ? AlexanderModule::trivial() : validate_module(factors);
  auto image_of = [&](std::size_t k) {
    std::vector<LaurentPoly> res;
    for (std::size_t j : kept) res.push_back(s.V(k, j));
    return out.M->element(res);
  };
  std::vector<ModuleElement> ia, ib;
  for (std::size_t k = 0; k < na; ++k) ia.push_back(image_of(k));
  for (std::size_t k = 0; k < nb; ++k) ib.push_back(image_of(na + k));
  out.from_a = ModuleHom::from_images(a.dst, out.M, ia);
  out.from_b = ModuleHom::from_images(b.dst, out.M, ib);
  return out;
}

namespace {

ConcordanceWitness induce_witness(const ConcordanceWitness& W, const ModuleHom& q) {
  RingMap m = induce_hom(q);
  ConcordanceWitness X;
  X.Hp = q.dst;
  X.jflat = W.jflat.then(q);
  X.jflat_dag = W.jflat_dag.then(q);
  X.V = change_coefficients(W.V, m);
  X.Theta = change_coefficients(W.Theta, X.V, [&](const GRE& x) { return m.apply(x); });
  X.j = change_coefficients(W.j, m);
  X.j_dag = change_coefficients(W.j_dag, m);
  X.delta = change_coefficients(W.delta, m);
  X.gamma = change_coefficients(W.gamma, m);
  X.gamma_dag = change_coefficients(W.gamma_dag, m);
  X.xi = W.xi;
  return X;
}

}  // namespace

ConcordanceWitness glue_witnesses(const KnotTriple&, const KnotTriple& Tdag, const KnotTriple& Tddag,
                                  const ConcordanceWitness& W1_, const ConcordanceWitness& W2_) {
  ModuleCokernel Q = module_cokernel(W1_.jflat_dag, W2_.jflat);
  ConcordanceWitness W1 = induce_witness(W1_, Q.from_a);
  ConcordanceWitness W2 = induce_witness(W2_, Q.from_b);
  const ModulePtr& H = Q.M;
  const GRE z = zero(H);

  KnotTriple b = induce_triple(Tdag, induce_hom(W1.jflat_dag));
  KnotTriple c = induce_triple(Tddag, induce_hom(W2.jflat_dag));
  SymmetricComplex<GRE> Ed = b.triad.glued_boundary();
  SymmetricComplex<GRE> Edd = c.triad.glued_boundary();
  GMap etad = b.triad.glued_map();
  GMap wt = varpi_E(Edd, Ed, c.la, b.la);  // E^ddag -> E^dag

  // V'' = V u_{Y^dag} Vbar with Theta'' the union structure along (Y^dag, Phi^dag)
  const GComplex& Yd = b.triad.Y;
  SymmetricPair<GRE> A{W1.j_dag, W1.Theta, b.triad.Phi.negated()};
  SymmetricPair<GRE> B{W2.j, W2.Theta, b.triad.Phi};
  SymmetricComplex<GRE> U = union_pairs(A, B);
  const GComplex& V = W1.V;
  const GComplex& Vb = W2.V;
  auto layout = [&](int r) { return BlockLayout({V.rank(r), Yd.rank(r - 1), Vb.rank(r)}); };
  auto into = [&](const GComplex& src, const GMap& f, std::size_t slot, int shift, int sign) {
    GMap g(src, U.C, shift);
    for (const auto& [r, k] : src.ranks()) {
      (void)k;
      BlockMatrix<GRE> m(BlockLayout({src.rank(r)}), layout(r + shift), z);
      m.set(0, slot, f.at(r).signed_by(sign));
      g.set(r, m.matrix());
    }
    return g;
  };

  ConcordanceWitness W;
  W.Hp = H;
  W.jflat = W1.jflat;
  W.jflat_dag = W2.jflat_dag;
  W.V = U.C;
  W.Theta = U.phi;
  W.j = into(W1.j.source(), W1.j, 0, 0, 1);
  W.j_dag = into(W2.j_dag.source(), W2.j_dag, 2, 0, -1);
  W.delta = into(W1.delta.source(), W1.delta, 0, 0, 1);
  W.gamma = into(W1.gamma.source(), W1.gamma, 0, 1, 1);

  // homotopy on the E^ddag summand: wt gamma1^dag, then through Y^dag, then Vbar
  const GComplex& Es = Edd.C;
  W.gamma_dag = GMap(Es, U.C, 1);
  GMap wt_eta = wt.then(etad);
  for (const auto& [r, k] : Es.ranks()) {
    (void)k;
    BlockMatrix<GRE> m(BlockLayout({Es.rank(r)}), layout(r + 1), z);
    m.set(0, 0, wt.at(r) * W1.gamma_dag.at(r));
    m.set(0, 1, wt_eta.at(r).signed_by(sign_pow(r)));
    m.set(0, 2, wt.at(r) * W2.gamma.at(r) - W2.gamma_dag.at(r));
    W.gamma_dag.set(r, m.matrix());
  }

  // xi'': images of xi' and xibar' in V''_1
  const std::size_t n1 = U.C.rank(1);
  const std::size_t off = V.rank(1) + Yd.rank(0);
  std::vector<QZVector> all;
  for (const auto& v : W1.xi) {
    QZVector x(n1, LaurentPoly());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
    all.push_back(x);
  }
  for (const auto& v : W2.xi) {
    QZVector x(n1, LaurentPoly());
    for (std::size_t i = 0; i < v.size(); ++i) x[off + i] = v[i];
    all.push_back(x);
  }
  const std::size_t na = Q.from_a.src->size();
  Matrix<Rat> qa = Q.from_a.q_matrix(), qb = Q.from_b.q_matrix();
  Matrix<Rat> qab = Matrix<Rat>::vcat(qa, qb);
  // xi'' on generator k: lift it to H' + Hbar' over Q and combine the t^e xi cycles
  for (std::size_t k = 0; k < H->size(); ++k) {
    std::vector<Rat> target = H->q_coords(H->gen(k));
    auto sol = solve_row(qab, target);
    if (!sol) throw std::logic_error("cokernel section not found");
    QZVector x(n1, LaurentPoly());
    std::size_t row = 0;
    auto add_block = [&](const ModulePtr& M, std::size_t base) {
      for (std::size_t i = 0; i < M->size(); ++i)
        for (long e = 0; e < M->factor(i).span(); ++e, ++row) {
          const Rat& c = (*sol)[row];
          if (c == 0) continue;
          for (std::size_t a = 0; a < n1; ++a) x[a] += LaurentPoly::monomial(c, e) * all[base + i][a];
        }
    };
    add_block(Q.from_a.src, 0);
    add_block(Q.from_b.src, na);
    W.xi.push_back(x);
  }
  return W;
}

ConcordanceWitness corrupt_witness(const ConcordanceWitness& W0, WitnessCorruption c) {
  ConcordanceWitness W = W0;
  const ModulePtr& H = W.Hp;
  switch (c) {
    case WitnessCorruption::ExtraFreeSummand: {
      GComplex V = W.V;
      GComplex X(zero(H));
      X.set_rank(0, 1);
      GComplex V2 = direct_sum(V, X);
      auto extend = [&](const GMap& f) {
        GMap g(f.source(), V2, f.shift());
        for (const auto& [r, k] : f.source().ranks()) {
          (void)k;
          Matrix<GRE> m(f.source().rank(r), V2.rank(r + f.shift()), zero(H));
          m.set_block(0, 0, f.at(r));
          g.set(r, m);
        }
        return g;
      };
      W.j = extend(W.j);
      W.j_dag = extend(W.j_dag);
      W.delta = extend(W.delta);
      W.gamma = extend(W.gamma);
      W.gamma_dag = extend(W.gamma_dag);
      W.Theta = direct_sum(V, W.Theta, X, GStructure(4));
      for (auto& x : W.xi) x.resize(V2.rank(1), LaurentPoly());
      W.V = V2;
      break;
    }
    case WitnessCorruption::BrokenHomotopy: {
      Matrix<GRE> m = W.gamma.at(0);
      if (m.rows() > 0 && m.cols() > 0) m(0, 0) = m(0, 0) + GRE(H, Rat(1));
      W.gamma.set(0, m);
      break;
    }
    case WitnessCorruption::ZeroConsistency:
      for (auto& x : W.xi)
        for (auto& v : x) v = LaurentPoly();
      break;
    case WitnessCorruption::NegatedDelta:
      W.delta = -W.delta;
      break;
    case WitnessCorruption::ScaledModuleMap: {
      std::vector<ModuleElement> im;
      for (const auto& e : W.jflat.images) im.push_back(W.jflat.dst->act(LaurentPoly(2), e));
      W.jflat = ModuleHom::from_images(W.jflat.src, W.jflat.dst, im);
      break;
    }
  }
  return W;
}

std::string corruption_name(WitnessCorruption c) {
  switch (c) {
    case WitnessCorruption::ExtraFreeSummand: return "extra free summand in V";
    case WitnessCorruption::BrokenHomotopy: return "broken homotopy gamma";
    case WitnessCorruption::ZeroConsistency: return "zero consistency cycles";
    case WitnessCorruption::NegatedDelta: return "negated delta";
    case WitnessCorruption::ScaledModuleMap: return "module map scaled by 2";
  }
  return "?";
}

}  // namespace kc
