#include "kc/blanchfield.hpp"

#include <algorithm>
#include <functional>

#include "kc/snf.hpp"

namespace kc {

namespace {

LaurentPoly pairing_sum(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& z) {
  LaurentPoly v;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !z[i].is_zero()) v += x[i] * z[i].involute();
  return v;
}

// Q-coordinates of a class annihilated by p, as the residue of p c modulo p.
std::vector<Rat> class_coords(const TorsionClass& c, const LaurentPoly& p) {
  RationalFunction q = c.rep() * RationalFunction(p);
  if (!q.is_laurent()) throw std::logic_error("pairing value is not annihilated by the factor " + p.str());
  LaurentPoly a = reduce_mod(q.num(), p);
  std::vector<Rat> out;
  for (long k = 0; k < p.span(); ++k) out.push_back(a.coeff(k));
  return out;
}

std::size_t rat_rank(const Matrix<Rat>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return snf(m).rank;
}

// Rows t^k g for every generator g; these span the Q[t,t^-1]-span over Q.
Matrix<Rat> span_rows(const AlexanderModule& M, const std::vector<ModuleElement>& gens) {
  const std::size_t d = M.q_dimension();
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : gens)
    for (std::size_t k = 0; k < d; ++k) rows.push_back(M.q_coords(M.act(LaurentPoly::t(static_cast<long>(k)), g)));
  Matrix<Rat> m(rows.size(), d, Rat(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rows[i][j];
  return m;
}

bool is_isotropic(const BlanchfieldForm& F, const std::vector<ModuleElement>& gens) {
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (!F(a, b).is_zero()) return false;
  return true;
}

// Nonzero polynomials of degree < deg with coefficients in [-3, 3], monomials first.
std::vector<LaurentPoly> graph_multipliers(long deg) {
  std::vector<LaurentPoly> out;
  for (long e = 0; e < std::max(deg, 1L); ++e)
    for (int sign : {1, -1}) out.push_back(LaurentPoly::monomial(Rat(sign), e));
  if (deg > 4) return out;
  std::vector<long> c(deg, -3);
  while (true) {
    std::vector<Rat> q(c.begin(), c.end());
    LaurentPoly a = LaurentPoly::from_coeffs(0, q);
    if (!a.is_zero() && a.terms().size() > 1) out.push_back(a);
    std::size_t k = 0;
    while (k < c.size() && c[k] == 3) c[k++] = -3;
    if (k == c.size()) break;
    ++c[k];
  }
  return out;
}

std::vector<LaurentPoly> irreducible_factors(const LaurentPoly& p) {
  std::vector<LaurentPoly> out;
  for (const auto& [q, m] : factor_rational(p)) {
    (void)m;
    out.push_back(q);
  }
  return out;
}

}  // namespace

BlanchfieldForm BlanchfieldForm::trivial() { return {AlexanderModule::trivial(Coefficients::Q), {}}; }

TorsionClass BlanchfieldForm::operator()(const ModuleElement& x, const ModuleElement& y) const {
  TorsionClass v;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x.r[i].is_zero()) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (y.r[j].is_zero()) continue;
      v = v + pairing[i][j].times(x.r[i] * y.r[j].involute());
    }
  }
  return v;
}

BlanchfieldForm BlanchfieldForm::negated() const {
  BlanchfieldForm F = *this;
  for (auto& row : F.pairing)
    for (auto& c : row) c = -c;
  return F;
}

Report validate_blanchfield(const BlanchfieldForm& F) {
  Report rep;
  const AlexanderModule& M = *F.module;
  const std::size_t k = M.size();
  if (F.pairing.size() != k) {
    rep.add("shape", false, "pairing matrix does not match the module");
    return rep;
  }
  for (const auto& row : F.pairing)
    if (row.size() != k) {
      rep.add("shape", false, "pairing matrix is not square");
      return rep;
    }
  bool sesq = true, herm = true;
  std::string detail;
  for (std::size_t i = 0; i < k && sesq; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const TorsionClass& b = F.pairing[i][j];
      if (!b.times(M.factor(i)).is_zero() || !b.times(M.factor(j).involute()).is_zero()) {
        sesq = false;
        detail = "Bl(g" + std::to_string(i) + ", g" + std::to_string(j) + ") is not annihilated by the orders";
        break;
      }
      if (b != F.pairing[j][i].involute() && herm) {
        herm = false;
        if (detail.empty()) detail = "Bl(g" + std::to_string(i) + ", g" + std::to_string(j) + ") != conj Bl(g" +
                                     std::to_string(j) + ", g" + std::to_string(i) + ")";
      }
    }
  rep.add("sesquilinear", sesq, sesq ? "" : detail);
  rep.add("hermitian", herm, herm ? "" : detail);
  if (!sesq) return rep;
  // adjoint H -> Hom(H, Q(t)/Q[t,t^-1]) as a square Q-matrix
  const std::size_t d = M.q_dimension();
  Matrix<Rat> A(d, d, Rat(0));
  std::size_t row = 0;
  for (std::size_t j = 0; j < k; ++j)
    for (long e = 0; e < M.factor(j).span(); ++e, ++row) {
      ModuleElement y = M.act(LaurentPoly::t(e), M.gen(j));
      std::size_t col = 0;
      for (std::size_t i = 0; i < k; ++i)
        for (const Rat& c : class_coords(F(M.gen(i), y), M.factor(i))) A(row, col++) = c;
    }
  const std::size_t rk = rat_rank(A);
  rep.add("non-singular", rk == d, rk == d ? "" : "adjoint has rank " + std::to_string(rk) + " < " + std::to_string(d));
  return rep;
}

ChainPairing::ChainPairing(SymmetricComplex<LaurentPoly> N) : N_(std::move(N)) {
  const int n = N_.phi.n();
  if (n % 2 == 0) throw std::invalid_argument("linking pairing needs an odd-dimensional complex");
  r_ = (n - 1) / 2;
}

std::vector<LaurentPoly> ChainPairing::dual_cocycle(const std::vector<LaurentPoly>& y) const {
  const auto& C = N_.C;
  const int n = N_.phi.n(), r = r_;
  if (!vec_is_zero(vec_mat(y, C.d(r)))) throw NotACycle("pairing argument is not a cycle");
  const Matrix<LaurentPoly> phi0 = N_.phi.at(C, 0, r);
  const Matrix<LaurentPoly> cobound = C.d(n - r + 1).adjoint();
  const Matrix<LaurentPoly> d = C.d(r + 1);
  Matrix<LaurentPoly> M(phi0.rows() + d.rows(), phi0.cols() + cobound.cols(), LaurentPoly());
  M.set_block(0, 0, phi0);
  M.set_block(0, phi0.cols(), cobound);
  M.set_block(phi0.rows(), 0, d);
  std::vector<LaurentPoly> rhs = y;
  rhs.resize(M.cols());
  auto sol = solve_row_fraction(M, rhs);
  if (!sol || !sol->second.is_unit())
    throw NoHomotopyInverse("phi_0 is not invertible on H_" + std::to_string(r) + " over Q[t,t^-1]");
  const LaurentPoly u = unit_inverse(sol->second);
  std::vector<LaurentPoly> a(sol->first.begin(), sol->first.begin() + static_cast<std::ptrdiff_t>(phi0.rows()));
  return vec_scale(u, a);
}

TorsionClass ChainPairing::operator()(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) const {
  const auto& C = N_.C;
  const int n = N_.phi.n();
  if (!vec_is_zero(vec_mat(x, C.d(r_)))) throw NotACycle("pairing argument is not a cycle");
  std::vector<LaurentPoly> a = dual_cocycle(y);
  auto sol = solve_row_fraction(C.d(n - r_).adjoint(), a);
  if (!sol) throw NotTorsion("dual class is not torsion");
  const auto& [z, s] = *sol;
  return TorsionClass(RationalFunction(pairing_sum(x, z), s.involute()));
}

SymmetricComplex<LaurentPoly> rationalize(const SymmetricComplex<GRE>& X) {
  SymmetricComplex<LaurentPoly> Q;
  auto C = complex_QZ(X.C);
  Q.C = *C;
  Q.phi = change_coefficients(X.phi, Q.C, [](const GRE& x) { return augment_QZ(x); });
  return Q;
}

BlanchfieldForm chain_blanchfield(const SymmetricComplex<LaurentPoly>& N) {
  ChainPairing B(N);
  HomologyPresentation<LaurentPoly> hp = homology_presentation(N.C, B.degree());
  if (hp.factors.size() != hp.k()) throw NotTorsion("H_" + std::to_string(B.degree()) + " has a free part");
  std::vector<LaurentPoly> factors;
  std::vector<std::vector<LaurentPoly>> cycles;
  for (std::size_t j = 0; j < hp.factors.size(); ++j) {
    if (hp.factors[j].is_unit()) continue;
    factors.push_back(hp.factors[j]);
    cycles.push_back(hp.generator(j));
  }
  return chain_blanchfield(N, validate_module(factors, Coefficients::Q), cycles);
}

BlanchfieldForm chain_blanchfield(const SymmetricComplex<LaurentPoly>& N, const ModulePtr& H,
                                  const std::vector<std::vector<LaurentPoly>>& cycles) {
  if (cycles.size() != H->size()) throw std::invalid_argument("expected one cycle per module generator");
  ChainPairing B(N);
  BlanchfieldForm F;
  F.module = H->coefficients() == Coefficients::Q ? H : validate_module(H->factors(), Coefficients::Q);
  F.pairing.assign(cycles.size(), std::vector<TorsionClass>(cycles.size()));
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    if (F.module->factor(j).is_unit()) continue;
    std::vector<LaurentPoly> a = B.dual_cocycle(cycles[j]);
    auto sol = solve_row_fraction(N.C.d(N.phi.n() - B.degree()).adjoint(), a);
    if (!sol) throw NotTorsion("dual class is not torsion");
    const auto& [z, s] = *sol;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (F.module->factor(i).is_unit()) continue;
      F.pairing[i][j] = TorsionClass(RationalFunction(pairing_sum(cycles[i], z), s.involute()));
    }
  }
  return F;
}

BlanchfieldForm chain_blanchfield(const ZeroSurgeryComplex& Z) {
  return chain_blanchfield(rationalize(Z.N), Z.H, Z.xi);
}

BlanchfieldForm blanchfield_from_seifert(const Matrix<Int>& V) {
  const std::size_t k = V.rows();
  if (V.cols() != k) throw NotSeifert("Seifert matrix is not square");
  if (k == 0) return BlanchfieldForm::trivial();
  SnfResult<Int> sv = snf(V - V.transpose());
  bool unimodular = sv.rank == k;
  for (const Int& f : sv.factors) unimodular = unimodular && f == 1;
  if (!unimodular) throw NotSeifert("det(V - V^T) is not +-1");
  Matrix<LaurentPoly> A(k, k, LaurentPoly());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      A(i, j) = LaurentPoly::monomial(Rat(V(i, j)), 1) - LaurentPoly(Rat(V(j, i)));
  SnfResult<LaurentPoly> s = snf(A);
  std::vector<LaurentPoly> factors;
  std::vector<std::vector<LaurentPoly>> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.factors.at(i).is_unit()) continue;
    factors.push_back(s.factors[i]);
    gens.push_back(s.Vinv.row(i));
  }
  BlanchfieldForm F;
  F.module = validate_module(factors, Coefficients::Q);
  F.pairing.assign(gens.size(), std::vector<TorsionClass>(gens.size()));
  const LaurentPoly tm1 = LaurentPoly::t(1) - LaurentPoly(1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto sol = solve_row_fraction(A, gens[i]);
    const auto& [w, den] = *sol;
    for (std::size_t j = 0; j < gens.size(); ++j)
      F.pairing[i][j] = TorsionClass(RationalFunction(tm1 * pairing_sum(w, gens[j]), den));
  }
  return F;
}

std::size_t span_dimension(const AlexanderModule& M, const std::vector<ModuleElement>& gens) {
  return rat_rank(span_rows(M, gens));
}

Report verify_metaboliser(const BlanchfieldForm& F, const Metaboliser& P) {
  Report rep;
  rep.add("isotropic", is_isotropic(F, P.generators));
  const std::size_t dP = span_dimension(*F.module, P.generators);
  const std::size_t d = F.module->q_dimension();
  rep.add("half dimension", 2 * dP == d, std::to_string(dP) + " of " + std::to_string(d));
  return rep;
}

std::string decision_name(MetabolicDecision::Kind k) {
  switch (k) {
    case MetabolicDecision::Kind::Yes:
      return "metabolic";
    case MetabolicDecision::Kind::No:
      return "not metabolic";
    case MetabolicDecision::Kind::Undecided:
      return "undecided";
  }
  return "?";
}

MetabolicDecision is_metabolic(const BlanchfieldForm& F) {
  MetabolicDecision out;
  const AlexanderModule& M = *F.module;
  const std::size_t d = M.q_dimension();
  if (d == 0) {
    out.kind = MetabolicDecision::Kind::Yes;
    out.metaboliser = Metaboliser{};
    return out;
  }
  if (d % 2 != 0) {
    out.kind = MetabolicDecision::Kind::No;
    out.reason = "odd Q-dimension " + std::to_string(d);
    return out;
  }
  for (std::size_t i = 0; i < M.size(); ++i)
    if (!is_squarefree(M.factor(i))) {
      out.reason = "factor " + M.factor(i).str() + " is not square-free";
      return out;
    }

  auto accept = [&](std::vector<ModuleElement> gens) {
    ++out.candidates_tried;
    Metaboliser P{std::move(gens)};
    if (!verify_metaboliser(F, P).ok()) return false;
    out.kind = MetabolicDecision::Kind::Yes;
    out.metaboliser = std::move(P);
    return true;
  };

  // divisor tuples: in summand i keep the part of order prod(chosen factors)
  std::vector<std::vector<LaurentPoly>> irr;
  for (std::size_t i = 0; i < M.size(); ++i) irr.push_back(irreducible_factors(M.factor(i)));
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t a = 0; a < irr[i].size(); ++a) slots.push_back({i, a});
  std::vector<bool> chosen(slots.size(), false);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t pos, long dim) -> bool {
    if (2 * dim > static_cast<long>(d)) return false;
    if (pos == slots.size()) {
      if (2 * dim != static_cast<long>(d)) return false;
      std::vector<ModuleElement> gens;
      for (std::size_t i = 0; i < M.size(); ++i) {
        LaurentPoly c(1);
        bool any = false;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (slots[s].first == i) {
            if (chosen[s])
              any = true;
            else
              c *= irr[i][slots[s].second];
          }
        if (any) gens.push_back(M.act(c, M.gen(i)));
      }
      return accept(gens);
    }
    chosen[pos] = true;
    if (rec(pos + 1, dim + irr[slots[pos].first][slots[pos].second].span())) return true;
    chosen[pos] = false;
    return rec(pos + 1, dim);
  };
  if (rec(0, 0)) return out;

  // graphs x -> a x between summands with equal factors, divisor candidates on the rest
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(M.size(), false);
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < M.size(); ++j)
      if (!used[j] && M.factor(j) == M.factor(i)) {
        pairs.push_back({i, j});
        used[i] = used[j] = true;
        break;
      }
  }
  if (!pairs.empty()) {
    std::vector<ModuleElement> graph;
    bool found = true;
    for (const auto& [i, j] : pairs) {
      std::optional<ModuleElement> g;
      for (const LaurentPoly& a : graph_multipliers(M.factor(i).span())) {
        ModuleElement x = M.add(M.gen(i), M.act(a, M.gen(j)));
        if (F(x, x).is_zero()) {
          g = x;
          break;
        }
      }
      if (!g) {
        found = false;
        break;
      }
      graph.push_back(*g);
    }
    if (found) {
      std::vector<std::pair<std::size_t, std::size_t>> rest;
      long rest_dim = 0;
      for (std::size_t i = 0; i < M.size(); ++i)
        if (!used[i]) {
          rest_dim += M.factor(i).span();
          for (std::size_t a = 0; a < irr[i].size(); ++a) rest.push_back({i, a});
        }
      std::vector<bool> pick(rest.size(), false);
      std::function<bool(std::size_t, long)> rec2 = [&](std::size_t pos, long dim) -> bool {
        if (2 * dim > rest_dim) return false;
        if (pos == rest.size()) {
          if (2 * dim != rest_dim) return false;
          std::vector<ModuleElement> gens = graph;
          for (std::size_t i = 0; i < M.size(); ++i) {
            if (used[i]) continue;
            LaurentPoly c(1);
            bool any = false;
            for (std::size_t s = 0; s < rest.size(); ++s)
              if (rest[s].first == i) {
                if (pick[s])
                  any = true;
                else
                  c *= irr[i][rest[s].second];
              }
            if (any) gens.push_back(M.act(c, M.gen(i)));
          }
          return accept(gens);
        }
        pick[pos] = true;
        if (rec2(pos + 1, dim + irr[rest[pos].first][rest[pos].second].span())) return true;
        pick[pos] = false;
        return rec2(pos + 1, dim);
      };
      if (rec2(0, 0)) return out;
    }
  }

  std::vector<LaurentPoly> all;
  for (const auto& v : irr) all.insert(all.end(), v.begin(), v.end());
  bool distinct = true;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) distinct = distinct && all[a] != all[b];
  if (distinct) {
    out.kind = MetabolicDecision::Kind::No;
    out.reason = "order " + M.order().str() + " is square-free; all " + std::to_string(out.candidates_tried) +
                 " divisor-generated submodules of half dimension fail isotropy";
  } else {
    out.reason = "repeated irreducible factor; no divisor or graph candidate among " + std::to_string(out.candidates_tried) + " is a metaboliser";
  }
  return out;
}

const MetabolicDecision& WittClass::decision() const {
  if (!decision_) decision_ = is_metabolic(form_);
  return *decision_;
}

BlanchfieldForm direct_sum(const BlanchfieldForm& A, const BlanchfieldForm& B) {
  BlanchfieldForm F;
  F.module = AlexanderModule::direct_sum(*A.module, *B.module);
  const std::size_t a = A.size(), n = a + B.size();
  F.pairing.assign(n, std::vector<TorsionClass>(n));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) F.pairing[i][j] = A.pairing[i][j];
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) F.pairing[a + i][a + j] = B.pairing[i][j];
  return F;
}

WittClass witt_sum(const WittClass& A, const WittClass& B) { return WittClass(direct_sum(A.form(), B.form())); }

WittClass witt_negate(const WittClass& A) { return WittClass(A.form().negated()); }

Metaboliser metaboliser_transfer(const BlanchfieldForm& H, const BlanchfieldForm& Hp, const Metaboliser& P,
                                 const Metaboliser& Q) {
  BlanchfieldForm S = direct_sum(H, Hp);
  Report rp = verify_metaboliser(S, P);
  if (!rp.ok()) throw std::invalid_argument("P is not a metaboliser: " + rp.first_failure());
  Report rq = verify_metaboliser(Hp, Q);
  if (!rq.ok()) throw std::invalid_argument("Q is not a metaboliser: " + rq.first_failure());
  const std::size_t dH = H.module->q_dimension(), dHp = Hp.module->q_dimension();
  Matrix<Rat> BP = span_rows(*S.module, P.generators);
  Matrix<Rat> BQ = span_rows(*Hp.module, Q.generators);
  Matrix<Rat> BPH = BP.block(0, 0, BP.rows(), dH);
  Matrix<Rat> BPp = BP.block(0, dH, BP.rows(), dHp);
  Metaboliser R;
  if (BP.rows() > 0) {
    Matrix<Rat> K = BQ.rows() > 0 ? left_kernel(Matrix<Rat>::vcat(BPp, BQ)) : left_kernel(BPp);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < K.rows(); ++i) {
      std::vector<Rat> a = K.row(i);
      a.resize(BP.rows());
      std::vector<Rat> h = vec_mat(a, BPH);
      if (vec_is_zero(h)) continue;
      R.generators.push_back(H.module->from_q_coords(h));
      const std::size_t nd = span_dimension(*H.module, R.generators);
      if (nd == dim)
        R.generators.pop_back();
      else
        dim = nd;
    }
  }
  Report rr = verify_metaboliser(H, R);
  if (!rr.ok()) throw std::runtime_error("transferred submodule is not a metaboliser: " + rr.first_failure());
  return R;
}

WittClass ac1_image(const KnotTriple& T) { return WittClass(chain_blanchfield(zero_surgery(T))); }

}  // namespace kc
