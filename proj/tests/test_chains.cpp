#include <doctest.h>

#include "kc/corpus.hpp"
#include "oracles.hpp"

using namespace kc;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::t(e); }
const LaurentPoly one(1);

ChainComplex<LaurentPoly> two_term(const LaurentPoly& x, int top) {
  ChainComplex<LaurentPoly> C{LaurentPoly()};
  C.set_rank(top, 1);
  C.set_rank(top - 1, 1);
  C.set_d(top, Matrix<LaurentPoly>::diagonal({x}, LaurentPoly()));
  return C;
}

// C_1 -> C_0 given by A (rows = C_1).
ChainComplex<Int> int_two_term(const Matrix<Int>& A) {
  ChainComplex<Int> C{Int(0)};
  C.set_rank(1, A.rows());
  C.set_rank(0, A.cols());
  C.set_d(1, A);
  return C;
}

}  // namespace

TEST_SUITE("chains") {

TEST_CASE("model torus complex") {
  KnotTriple F = corpus_triple("figure-eight");
  auto E = model_torus(F.model());
  CHECK(validate_complex(E.C).ok());
  CHECK((E.C.d(2) * E.C.d(1)).is_zero());
}

TEST_CASE("identity and zero homotopy") {
  auto C = two_term(trefoil_polynomial(), 2);
  auto id = ChainMap<LaurentPoly>::identity(C);
  CHECK(validate_chain_map(id).ok());
  CHECK(validate_homotopy(ChainMap<LaurentPoly>::zero(C, C, 1), id, id).ok());
}

TEST_CASE("dual complex") {
  auto C = two_term(t() - one, 1);
  auto D = dual_complex(C, 1);
  CHECK(D.rank(0) == 1);
  CHECK(D.rank(1) == 1);
  const LaurentPoly e = D.d(1)(0, 0);
  CHECK((e == t(-1) - one || e == one - t(-1)));
  auto DD = dual_complex(D, 1);
  CHECK(DD.ranks() == C.ranks());
  for (int r : {0, 1, 2}) {
    auto a = DD.d(r), b = C.d(r);
    CHECK((a == b || a == -b));
  }
}

TEST_CASE("mapping cones") {
  auto C = two_term(trefoil_polynomial(), 2);
  auto K = mapping_cone(ChainMap<LaurentPoly>::identity(C));
  CHECK(validate_complex(K).ok());
  CHECK(homology(K).is_zero());
  CHECK(homology(complex_Q(K)).is_zero());

  auto D = two_term(stevedore_polynomial(), 1);
  auto Z = mapping_cone(ChainMap<LaurentPoly>::zero(C, D));
  for (int r = -1; r <= 4; ++r) CHECK(Z.rank(r) == D.rank(r) + C.rank(r - 1));
}

TEST_CASE("unknot meridian cone is rationally acyclic in low degrees") {
  ZeroSurgeryComplex Z = zero_surgery(unknot_triple());
  auto h = homology(complex_Q(mapping_cone(Z.f_minus)));
  CHECK(h.at(0).free_rank == 0);
  CHECK(h.at(1).free_rank == 0);
}

TEST_CASE("circle complex at each level") {
  ModulePtr H = AlexanderModule::trivial();
  GComplex D = circle_complex(H, meridian(*H));
  auto Zc = complex_Z(D);
  REQUIRE(Zc);
  CHECK(Zc->d(1).is_zero());
  auto hz = homology(*Zc);
  CHECK(hz.at(0).free_rank == 1);
  CHECK(hz.at(1).free_rank == 1);
  auto hq = homology(*complex_QZ(D));
  CHECK(hq.at(0).free_rank == 0);
  REQUIRE(hq.at(0).torsion.size() == 1);
  CHECK(hq.at(0).torsion[0] == (t() - one).str());
  CHECK(hq.at(1) == DegreeHomology{});
  auto same = change_coefficients(D, RingMap::identity(H));
  CHECK(same == D);
}

TEST_CASE("cyclic torsion module") {
  auto C = two_term(trefoil_polynomial(), 2);
  auto h = homology(C);
  CHECK(h.at(1).free_rank == 0);
  REQUIRE(h.at(1).torsion.size() == 1);
  CHECK(h.at(1).torsion[0] == trefoil_polynomial().str());
  CHECK(h.at(2) == DegreeHomology{});

  std::vector<LaurentPoly> g = {one};
  std::vector<LaurentPoly> tg = {t()};
  CHECK_FALSE(is_homologous(C, 1, g, tg).value);
  // t^2 g = (t - 1) g
  std::vector<LaurentPoly> t2g = {t(2)}, t1g = {t() - one};
  auto w = is_homologous(C, 1, t2g, t1g);
  CHECK(w.value);
  CHECK(is_homologous(C, 1, g, g).value);
}

TEST_CASE("integer homology matches determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix<Int> A = oracle::random_int_matrix(rng, r, c, 4);
    auto h = homology(int_two_term(A));
    auto inv = oracle::invariant_factors(A);
    const std::size_t rank = inv.size();
    CHECK(h.at(0).free_rank == c - rank);
    CHECK(h.at(1).free_rank == r - rank);
    std::vector<std::string> tors;
    for (const auto& f : inv)
      if (abs(f) != 1) tors.push_back(Int(abs(f)).get_str());
    CHECK(h.at(0).torsion == tors);
  }
}

TEST_CASE("rational betti numbers match ranks") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    std::size_t n2 = 1 + rng() % 3, n1 = 2 + rng() % 3, n0 = 1 + rng() % 3;
    Matrix<Int> A = oracle::random_int_matrix(rng, n1, n0, 3);
    Matrix<Rat> d1(n1, n0, Rat(0));
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n0; ++b) d1(a, b) = Rat(A(a, b));
    Matrix<Rat> K = left_kernel(d1);
    Matrix<Rat> d2(n2, n1, Rat(0));
    if (K.rows() > 0) {
      Matrix<Int> B = oracle::random_int_matrix(rng, n2, K.rows(), 2);
      Matrix<Rat> Bq(n2, K.rows(), Rat(0));
      for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < K.rows(); ++b) Bq(a, b) = Rat(B(a, b));
      d2 = Bq * K;
    }
    ChainComplex<Rat> C{Rat(0)};
    C.set_rank(2, n2);
    C.set_rank(1, n1);
    C.set_rank(0, n0);
    C.set_d(2, d2);
    C.set_d(1, d1);
    REQUIRE(validate_complex(C).ok());
    auto h = homology(C);
    const std::size_t r1 = oracle::q_rank(oracle::to_rows(d1)), r2 = oracle::q_rank(oracle::to_rows(d2));
    CHECK(h.at(0).free_rank == n0 - r1);
    CHECK(h.at(1).free_rank == n1 - r1 - r2);
    CHECK(h.at(2).free_rank == n2 - r2);
    long chi = 0;
    for (int r : {0, 1, 2}) chi += sign_pow(r) * static_cast<long>(h.at(r).free_rank);
    CHECK(chi == euler_characteristic(C));
  }
}

}  // TEST_SUITE
