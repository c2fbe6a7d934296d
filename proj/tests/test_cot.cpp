#include <doctest.h>

#include "kc/corpus.hpp"
#include "kc/cot.hpp"

using namespace kc;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::t(e); }

TorsionClass tc(const LaurentPoly& num, const LaurentPoly& den) { return TorsionClass(RationalFunction(num, den)); }

// (n, a)(m, b) = (n + m, a + t^n b), written out directly
GammaElement product_oracle(const GammaElement& x, const GammaElement& y) {
  return {x.n + y.n, TorsionClass(x.a.rep() + RationalFunction(t(x.n)) * y.a.rep())};
}

GammaElement random_gamma(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-3, 3), c(-4, 4);
  const LaurentPoly dens[] = {trefoil_polynomial(), figure_eight_polynomial(), stevedore_polynomial()};
  return {n(rng), tc(poly({c(rng), c(rng)}), dens[rng() % 3])};
}

ChainComplex<QGamma> gamma_circle(const QGamma& d) {
  ChainComplex<QGamma> C{QGamma()};
  C.set_rank(0, 1);
  C.set_rank(1, 1);
  C.set_d(1, Matrix<QGamma>::diagonal({d}, QGamma()));
  return C;
}

}  // namespace

TEST_SUITE("cot") {

TEST_CASE("gamma products") {
  const LaurentPoly d = trefoil_polynomial();
  GammaElement s{1, TorsionClass()}, a{0, tc(LaurentPoly(1), d)};
  CHECK(gamma_mul(s, a) == GammaElement{1, tc(t(), d)});
  CHECK(gamma_mul(a, s) == GammaElement{1, tc(LaurentPoly(1), d)});
  CHECK(gamma_mul(s, gamma_inv(s)) == gamma_identity());
  // t^2 / (t^2 - t + 1) = 1 + (t - 1)/(t^2 - t + 1)
  CHECK(gamma_mul(GammaElement{2, TorsionClass()}, a).a == tc(t() - LaurentPoly(1), d));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    GammaElement x = random_gamma(rng), y = random_gamma(rng), z = random_gamma(rng);
    CHECK(gamma_mul(x, y) == product_oracle(x, y));
    CHECK(gamma_mul(gamma_mul(x, y), z) == gamma_mul(x, gamma_mul(y, z)));
    CHECK(gamma_mul(gamma_inv(x), x) == gamma_identity());
  }
}

TEST_CASE("group ring") {
  GammaElement g{1, tc(LaurentPoly(1), trefoil_polynomial())};
  QGamma x = QGamma::group(g, Rat(2)) - QGamma(Rat(1));
  CHECK(gamma_to_Q(x) == 1);
  CHECK(gamma_to_QZ(x) == LaurentPoly(Rat(2)) * t() - LaurentPoly(1));
  CHECK(x.involute().involute() == x);
  CHECK_FALSE(x.in_meridian_subring());
  CHECK(QGamma::from_laurent(poly({1, -1})).in_meridian_subring());
  CHECK(gamma_to_QZ(x * x.involute()) == gamma_to_QZ(x) * gamma_to_QZ(x).involute());
}

TEST_CASE("rho is a homomorphism") {
  std::mt19937_64 rng(42);
  for (const auto& T : corpus_triples()) {
    if (T.H->size() == 0) continue;
    Representation rho = rho_from_p(T, random_element(*T.H, rng));
    for (int i = 0; i < 40; ++i) {
      GroupElement a{long(rng() % 5) - 2, random_element(*T.H, rng)};
      GroupElement b{long(rng() % 5) - 2, random_element(*T.H, rng)};
      CHECK(rho(group_mul(*T.H, a, b)) == gamma_mul(rho(a), rho(b)));
    }
    CHECK(rho(group_identity(*T.H)) == gamma_identity());
  }
  KnotTriple F = corpus_triple("figure-eight");
  Representation r1 = rho_from_p(F, F.H->gen(0));
  // rho(g1) = (1, Bl(h1, p)) with h1 = p = generator
  CHECK(r1(F.g1) == GammaElement{1, tc(t(), figure_eight_polynomial())});
  CHECK(rho_from_p(F, F.H->zero())(F.g1) == GammaElement{1, TorsionClass()});
}

TEST_CASE("induced zero surgery") {
  for (const auto& T : corpus_triples()) {
    INFO(T.label);
    ZeroSurgeryComplex Z = zero_surgery(T);
    GammaComplex Np = induce_over_gamma(Z, rho_from_p(T, T.H->zero()));
    CHECK(validate_symmetric(Np, false).ok());
    CHECK(augment_to_QZ(Np.C) == rationalize(Z.N).C);
  }
}

TEST_CASE("contractibility certificates") {
  KnotTriple S = corpus_triple("stevedore");
  ZeroSurgeryComplex Z = zero_surgery(S);
  Representation rho = rho_from_p(S, S.H->gen(0));
  GammaComplex Np = induce_over_gamma(Z, rho);
  auto cert = certify_contractible_over_K(Np.C, induce_over_gamma(Z.f_minus, rho));
  CHECK(cert.meridian_image == "(1, 0)");
  CHECK(cert.cone_Q.at(0) == DegreeHomology{});
  CHECK(cert.cone_Q.at(1) == DegreeHomology{});

  // trivial meridian
  auto flat = gamma_circle(QGamma());
  CHECK_THROWS_AS(certify_contractible_over_K(flat, GammaMap::identity(flat)), CertificateUnavailable);
  // zero map: H_0 of the cone survives
  auto circ = gamma_circle(QGamma::group({1, TorsionClass()}) - QGamma(Rat(1)));
  CHECK_THROWS_AS(certify_contractible_over_K(Np.C, GammaMap::zero(circ, Np.C)), CertificateUnavailable);
}

TEST_CASE("unknot product solution") {
  KnotTriple U = unknot_triple();
  Representation rho = rho_from_p(U, U.H->zero());
  OneSolution S = product_solution(U, rho);
  Report r = validate_algebraic_one_solution(U, rho, S);
  CHECK_MESSAGE(r.ok(), r.first_failure());

  // V lives in degrees 0 and 1, so every Theta component is empty
  for (int k = 0; k <= 4; ++k) CHECK(S.Theta.at(S.V, 0, k).rows() * S.Theta.at(S.V, 0, k).cols() == 0);
  OneSolution a = S;
  a.V.set_d(1, a.V.d(1).scaled(QGamma(Rat(2))));
  CHECK_FALSE(validate_algebraic_one_solution(U, rho, a).ok());

  OneSolution b = S;
  b.j.set(0, b.j.at(0).scaled(QGamma(Rat(2))));
  CHECK_FALSE(validate_algebraic_one_solution(U, rho, b).ok());

  // the product solution is not a solution for a nontrivial module
  KnotTriple St = corpus_triple("stevedore");
  Representation r0 = rho_from_p(St, St.H->zero());
  CHECK_FALSE(validate_algebraic_one_solution(St, r0, product_solution(St, r0)).ok());
}

TEST_CASE("families") {
  CotFamily u = assemble_cot_family(unknot_triple());
  CHECK(u.decision.kind == MetabolicDecision::Kind::Yes);
  CHECK(u.entries.size() == 1);
  CHECK(u.p0_compatible);

  CotFamily s = assemble_cot_family(corpus_triple("stevedore"));
  CHECK(s.decision.kind == MetabolicDecision::Kind::Yes);
  REQUIRE(s.metabolisers.size() == 1);
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].in_metaboliser == std::vector<bool>{true});
  CHECK(s.entries[1].in_metaboliser == std::vector<bool>{false});
  for (const auto& e : s.entries) CHECK(e.certificate);

  CotFamily tr = assemble_cot_family(corpus_triple("trefoil"));
  CHECK(tr.no_metaboliser);
  CHECK(tr.metabolisers.empty());
  CHECK(tr.p0_compatible);
}

}  // TEST_SUITE
