#include <doctest.h>

#include "kc/corpus.hpp"
#include "oracles.hpp"

using namespace kc;

namespace {

bool all_levels_zero(const LevelHomology& h) { return h.all_zero() && h.Q.has_value(); }

SymmetricComplex<GRE> model_symmetric(const ModelBoundary& m) { return {m.C, m.phi}; }

}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("model boundary is Poincare") {
  ModelBoundary m = corpus_triple("figure-eight").model();
  CHECK(validate_symmetric(model_symmetric(m)).ok());
  SymmetricComplex<GRE> zero{m.C, GStructure(1)};
  Report r = validate_symmetric(zero);
  CHECK(r.has_failure_containing("Poincare"));
  CHECK_FALSE(r.has_failure_containing("structure relations"));
}

TEST_CASE("unknot triad") { CHECK(validate_triad(unknot_triple().triad).ok()); }

TEST_CASE("thom complex of a pair with empty boundary") {
  auto X = boundary_construction(rank_one_complex(trefoil_polynomial()));
  SymmetricComplex<LaurentPoly> Y{X.C, X.phi};
  SymmetricPair<LaurentPoly> P;
  P.f = ChainMap<LaurentPoly>(ChainComplex<LaurentPoly>(LaurentPoly()), X.C);
  P.dphi = X.phi;
  P.phi = SymmetricStructure<LaurentPoly>(X.phi.n() - 1, X.phi.eps());
  auto T = algebraic_thom(P);
  CHECK(T.C == Y.C);
  CHECK(T.phi == Y.phi);
}

TEST_CASE("thom sign spot check") {
  ModelBoundary m = corpus_triple("trefoil").model();
  SymmetricPair<GRE> P{m.ip, GStructure(2), m.phi};
  auto T = algebraic_thom(P);
  const int N = 2;
  const auto& C = P.C();
  const auto& D = P.D();
  for (int r : {1, 2}) {
    const int q = N - r;
    Matrix<GRE> full = T.phi.at(T.C, 0, r);
    Matrix<GRE> block = full.block(0, D.rank(r), D.rank(q), C.rank(r - 1));
    Matrix<GRE> expect = (P.f.at(q).adjoint() * m.phi.at(C, 0, r - 1)).signed_by(sign_pow(N - r - 1));
    CHECK(block == expect);
  }
}

TEST_CASE("boundary of a Poincare complex is acyclic") {
  ModelBoundary m = corpus_triple("trefoil").model();
  auto B = boundary_construction(model_symmetric(m));
  CHECK(all_levels_zero(level_homology(B.C)));
}

TEST_CASE("boundary of the rank-one complex") {
  auto B = boundary_construction(rank_one_complex(trefoil_polynomial()));
  CHECK(B.phi.n() == 3);
  CHECK(validate_symmetric(B).ok());
  auto h = homology(B.C);
  REQUIRE(h.at(1).torsion.size() == 1);
  CHECK(h.at(1).torsion[0] == trefoil_polynomial().str());
  CHECK(h.at(1).free_rank == 0);
}

TEST_CASE("boundary of a direct sum") {
  auto A = rank_one_complex(trefoil_polynomial()), B = rank_one_complex(stevedore_polynomial());
  SymmetricComplex<LaurentPoly> S{direct_sum(A.C, B.C), direct_sum(A.C, A.phi, B.C, B.phi)};
  auto dS = boundary_construction(S);
  auto dA = boundary_construction(A), dB = boundary_construction(B);
  CHECK(level_homology(dS.C) == level_homology(direct_sum(dA.C, dB.C)));
  CHECK(validate_symmetric(dS).ok());
}

TEST_CASE("thickening") {
  auto X = rank_one_complex(stevedore_polynomial());
  auto P = poincare_thickening(X);
  CHECK(validate_symmetric(P).ok());
  // i = (0, 1): no component into the C_{r+1} summand
  for (const auto& [r, k] : P.C().ranks()) {
    (void)k;
    Matrix<LaurentPoly> f = P.f.at(r);
    CHECK(f.block(0, 0, X.C.rank(r + 1), f.cols()).is_zero());
  }
  auto back = algebraic_thom(P);
  CHECK(level_homology(back.C) == level_homology(X.C));

  // zero structure on an acyclic complex
  ChainComplex<LaurentPoly> C{LaurentPoly()};
  C.set_rank(1, 1);
  C.set_rank(2, 1);
  C.set_d(2, Matrix<LaurentPoly>::diagonal({LaurentPoly(1)}, LaurentPoly()));
  SymmetricComplex<LaurentPoly> Z{C, SymmetricStructure<LaurentPoly>(4)};
  auto PZ = poincare_thickening(Z);
  CHECK(all_levels_zero(level_homology(PZ.C())));
  CHECK(all_levels_zero(level_homology(PZ.D())));
}

TEST_CASE("thickening of a thom complex") {
  ModelBoundary m = corpus_triple("figure-eight").model();
  SymmetricPair<GRE> P{m.ip, GStructure(2), m.phi};
  REQUIRE(validate_symmetric(P).ok());
  auto X = algebraic_thom(P);
  auto Q = poincare_thickening(X);
  CHECK(level_homology(Q.D()) == level_homology(dual_complex(X.C, 2)));
  CHECK(level_homology(Q.C()) == level_homology(m.C));
}

TEST_CASE("doubling and union with empty boundary") {
  ModelBoundary m = corpus_triple("trefoil").model();
  SymmetricPair<GRE> B{m.ip, GStructure(2), m.phi};
  SymmetricPair<GRE> A{m.ip, GStructure(2), m.phi.negated()};
  auto D = union_pairs(A, B);
  CHECK(validate_symmetric(D).ok());

  auto X = boundary_construction(rank_one_complex(trefoil_polynomial()));
  auto Y = boundary_construction(rank_one_complex(stevedore_polynomial()));
  ChainComplex<LaurentPoly> empty{LaurentPoly()};
  SymmetricStructure<LaurentPoly> none(2);
  SymmetricPair<LaurentPoly> PX{ChainMap<LaurentPoly>(empty, X.C), X.phi, none};
  SymmetricPair<LaurentPoly> PY{ChainMap<LaurentPoly>(empty, Y.C), Y.phi, none};
  auto U = union_pairs(PX, PY);
  CHECK(U.C == direct_sum(X.C, Y.C));
  CHECK(U.phi == direct_sum(X.C, X.phi, Y.C, Y.phi));
}

TEST_CASE("product cobordisms") {
  ModelBoundary m = corpus_triple("figure-eight").model();
  auto P = product_cobordism(GMap::identity(m.C), m.phi, m.phi);
  CHECK(validate_pair_relations(P).ok());
  CHECK(P.phi == direct_sum(m.C, m.phi, m.C, m.phi.negated()));
  auto S = product_cobordism(m.varsigma, m.phi, m.phi.negated());
  CHECK(validate_pair_relations(S).ok());
}

TEST_CASE("connectedness") {
  ModelBoundary m = corpus_triple("trefoil").model();
  CHECK(is_connected(model_symmetric(m)).connected());
  CHECK(is_connected(rank_one_complex(trefoil_polynomial())).connected());
  ChainComplex<Rat> C{Rat(0)};
  C.set_rank(0, 1);
  SymmetricComplex<Rat> X{C, SymmetricStructure<Rat>(2)};
  CHECK_FALSE(is_connected(X).connected());
}

}  // TEST_SUITE
