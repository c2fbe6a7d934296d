#include <doctest.h>

#include "kc/corpus.hpp"
#include "kc/surgery.hpp"

using namespace kc;

namespace {

const LaurentPoly one(1), zero;

// rank-one trefoil form plus a hyperbolic plane, all in degree 2
SymmetricComplex<LaurentPoly> trefoil_plus_hyperbolic() {
  SymmetricComplex<LaurentPoly> X;
  X.C = ChainComplex<LaurentPoly>(zero);
  X.C.set_rank(2, 3);
  X.phi = SymmetricStructure<LaurentPoly>(4);
  Matrix<LaurentPoly> m(3, 3, zero);
  m(0, 0) = symmetrize(trefoil_polynomial());
  m(1, 2) = one;
  m(2, 1) = one;
  X.phi.set(X.C, 0, 2, m);
  return X;
}

}  // namespace

TEST_SUITE("surgery") {

TEST_CASE("hyperbolic surgery") {
  auto X = hyperbolic_example();
  REQUIRE(validate_symmetric(X).ok());
  auto P = surgery_data_from_cocycles(X, {{Rat(1), Rat(0)}});
  CHECK(validate_symmetric(P).ok());
  auto Y = algebraic_surgery(X, P);
  CHECK(validate_symmetric(Y).ok());
  CHECK(homology(Y.C).is_zero());

  try {
    surgery_data_from_cocycles(X, {{Rat(1), Rat(1)}});
    FAIL("expected CupProductNonzero");
  } catch (const CupProductNonzero& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.value == "2");
  }
  // skew-symmetric form: (1, 1) has zero self cup product
  auto Xm = hyperbolic_example(-1);
  CHECK_NOTHROW(surgery_data_from_cocycles(Xm, {{Rat(1), Rat(1)}}));
}

TEST_CASE("non-cocycles are refused") {
  ChainComplex<Rat> C{Rat(0)};
  C.set_rank(2, 1);
  C.set_rank(3, 1);
  C.set_d(3, Matrix<Rat>::diagonal({Rat(2)}, Rat(0)));
  SymmetricComplex<Rat> X{C, SymmetricStructure<Rat>(5)};
  CHECK_THROWS_AS(surgery_data_from_cocycles(X, {{Rat(1)}}), NotCocycle);
}

TEST_CASE("empty data is the identity") {
  auto X = rank_one_complex(stevedore_polynomial());
  auto P = surgery_data_from_cocycles(X, {});
  auto Y = algebraic_surgery(X, P);
  CHECK(Y.C == X.C);
  CHECK(Y.phi == X.phi);
}

TEST_CASE("killing a hyperbolic summand") {
  auto X = trefoil_plus_hyperbolic();
  REQUIRE(validate_symmetric(X, false).ok());
  auto P = surgery_data_from_cocycles(X, {{zero, one, zero}});
  auto Y = algebraic_surgery(X, P);
  CHECK(validate_symmetric(Y, false).ok());
  auto hx = homology(X.C), hy = homology(Y.C);
  CHECK(hx.at(2).free_rank == 3);
  CHECK(hy.at(2).free_rank == 1);
  CHECK(hy.at(1) == hx.at(1));
  CHECK(level_homology(Y.C).Q->at(2).free_rank == 1);
  // the boundary is unchanged up to homology
  CHECK(level_homology(boundary_construction(Y).C) == level_homology(boundary_construction(X).C));
}

TEST_CASE("boundary homology is invariant") {
  for (const auto* name : {"trefoil", "figure-eight"}) {
    auto Xt = rank_one_complex(corpus_triple(name).H->factor(0));
    SymmetricComplex<LaurentPoly> X = Xt;
    X.C = ChainComplex<LaurentPoly>(zero);
    X.C.set_rank(2, 3);
    Matrix<LaurentPoly> m(3, 3, zero);
    m(0, 0) = Xt.phi.at(Xt.C, 0, 2)(0, 0);
    m(1, 2) = one;
    m(2, 1) = one;
    X.phi = SymmetricStructure<LaurentPoly>(4);
    X.phi.set(X.C, 0, 2, m);
    auto Y = algebraic_surgery(X, surgery_data_from_cocycles(X, {{zero, zero, one}}));
    CHECK(level_homology(boundary_construction(Y).C) == level_homology(boundary_construction(Xt).C));
  }
}

}  // TEST_SUITE
