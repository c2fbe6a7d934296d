#include <doctest.h>

#include "kc/blanchfield.hpp"
#include "kc/corpus.hpp"
#include "oracles.hpp"

using namespace kc;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::t(e); }
using Kind = MetabolicDecision::Kind;

// det(V - t V^T) by cofactor expansion
LaurentPoly seifert_det(const Matrix<Int>& V) {
  Matrix<LaurentPoly> A(V.rows(), V.cols(), LaurentPoly());
  for (std::size_t i = 0; i < V.rows(); ++i)
    for (std::size_t j = 0; j < V.cols(); ++j) A(i, j) = LaurentPoly(Rat(V(i, j))) - t() * LaurentPoly(Rat(V(j, i)));
  return oracle::det(A);
}

BlanchfieldForm triple_form(const std::string& name) { return chain_blanchfield(zero_surgery(corpus_triple(name))); }

void check_hermitian(const BlanchfieldForm& F) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    ModuleElement x = random_element(*F.module, rng), y = random_element(*F.module, rng);
    CHECK(F(x, y) == F(y, x).involute());
    LaurentPoly a = oracle::random_poly(rng, -1, 1, 2);
    CHECK(F(F.module->act(a, x), y) == F(x, y).times(a));
    CHECK(F(x, F.module->act(a, y)) == F(x, y).times(a.involute()));
  }
}

}  // namespace

TEST_SUITE("blanchfield") {

TEST_CASE("closed form on the generator") {
  // Bl(g, g) = 1 / Delta_sym
  for (const auto* name : {"trefoil", "figure-eight", "stevedore"}) {
    INFO(std::string(name));
    KnotTriple T = corpus_triple(name);
    BlanchfieldForm F = triple_form(name);
    REQUIRE(F.size() == 1);
    LaurentPoly d = symmetrize(T.H->given_factor(0));
    CHECK(F.pairing[0][0] == TorsionClass(RationalFunction(LaurentPoly(1), d)));
    CHECK(validate_blanchfield(F).ok());
    check_hermitian(F);
  }
  CHECK(triple_form("trefoil").pairing[0][0] == TorsionClass(RationalFunction(t(), trefoil_polynomial())));
  CHECK(triple_form("unknot").size() == 0);
}

TEST_CASE("seifert forms") {
  for (const auto& ex : seifert_corpus()) {
    INFO(ex.name);
    BlanchfieldForm F = blanchfield_from_seifert(ex.V);
    CHECK(validate_blanchfield(F).ok());
    LaurentPoly d = seifert_det(ex.V);
    if (ex.V.rows() == 0) {
      CHECK(F.module->q_dimension() == 0);
      continue;
    }
    CHECK(associates(F.module->order(), d));
    for (const auto& row : F.pairing)
      for (const auto& v : row) CHECK(divides(v.rep().den(), d));
    check_hermitian(F);
  }
  Matrix<Int> bad(1, 1, Int(1));
  CHECK_THROWS_AS(blanchfield_from_seifert(bad), NotSeifert);
  CHECK_THROWS_AS(blanchfield_from_seifert(Matrix<Int>(1, 2, Int(0))), NotSeifert);
}

TEST_CASE("metabolic decisions") {
  auto st = is_metabolic(triple_form("stevedore"));
  REQUIRE(st.kind == Kind::Yes);
  REQUIRE(st.metaboliser);
  CHECK(verify_metaboliser(triple_form("stevedore"), *st.metaboliser).ok());
  CHECK(span_dimension(*triple_form("stevedore").module, st.metaboliser->generators) == 1);

  CHECK(is_metabolic(triple_form("trefoil")).kind == Kind::No);
  CHECK(is_metabolic(triple_form("figure-eight")).kind == Kind::No);
  CHECK(is_metabolic(BlanchfieldForm::trivial()).kind == Kind::Yes);

  BlanchfieldForm tt = direct_sum(triple_form("trefoil"), triple_form("trefoil"));
  CHECK(is_metabolic(tt).kind == Kind::Undecided);
  // figure-eight has order two: x -> (2t - 1) x is an isometry onto the negative form
  BlanchfieldForm ff = direct_sum(triple_form("figure-eight"), triple_form("figure-eight"));
  auto d8 = is_metabolic(ff);
  REQUIRE(d8.kind == Kind::Yes);
  CHECK(verify_metaboliser(ff, *d8.metaboliser).ok());

  // the generator of the trefoil module is not isotropic
  BlanchfieldForm F = triple_form("trefoil");
  Metaboliser g{{F.module->gen(0)}};
  CHECK_FALSE(verify_metaboliser(F, g).ok());
}

TEST_CASE("witt group operations") {
  WittClass T(triple_form("trefoil"));
  CHECK(witt_negate(witt_negate(T)).form().pairing == T.form().pairing);
  WittClass z = witt_sum(T, witt_negate(T));
  CHECK(z.decision().kind == Kind::Yes);
  REQUIRE(z.decision().metaboliser);
  CHECK(verify_metaboliser(z.form(), *z.decision().metaboliser).ok());
  WittClass s = witt_sum(WittClass(triple_form("stevedore")), WittClass(BlanchfieldForm::trivial()));
  CHECK(s.decision().kind == Kind::Yes);
  CHECK(witt_sum(T, WittClass(triple_form("stevedore"))).decision().kind == Kind::No);
}

TEST_CASE("metaboliser transfer") {
  BlanchfieldForm S = triple_form("stevedore"), Tr = triple_form("trefoil");
  BlanchfieldForm Hp = direct_sum(Tr, Tr.negated());
  auto q = is_metabolic(Hp);
  REQUIRE(q.metaboliser);
  auto ps = is_metabolic(S);
  REQUIRE(ps.metaboliser);
  BlanchfieldForm Sum = direct_sum(S, Hp);
  auto P = is_metabolic(Sum);
  REQUIRE(P.kind == Kind::Yes);
  Metaboliser R = metaboliser_transfer(S, Hp, *P.metaboliser, *q.metaboliser);
  CHECK(verify_metaboliser(S, R).ok());

  // H' trivial: R is P itself
  BlanchfieldForm S0 = direct_sum(S, BlanchfieldForm::trivial());
  Metaboliser R0 = metaboliser_transfer(S, BlanchfieldForm::trivial(), *is_metabolic(S0).metaboliser, Metaboliser{});
  CHECK(span_dimension(*S.module, R0.generators) == 1);

  CHECK_THROWS(metaboliser_transfer(Tr, Hp, Metaboliser{{}}, *q.metaboliser));
}

TEST_CASE("ac1 images") {
  CHECK(ac1_image(unknot_triple()).form().size() == 0);
  CHECK(ac1_image(unknot_triple()).decision().kind == Kind::Yes);
  KnotTriple T = corpus_triple("trefoil");
  WittClass w = ac1_image(connected_sum(T, invert_triple(T)));
  CHECK(w.decision().kind == Kind::Yes);
  CHECK(ac1_image(invert_triple(T)).form().pairing == ac1_image(T).form().negated().pairing);
}

TEST_CASE("seifert and chain routes agree") {
  for (const auto* name : {"trefoil", "figure-eight", "stevedore"}) {
    INFO(std::string(name));
    BlanchfieldForm a = blanchfield_from_seifert(seifert_matrix(name));
    BlanchfieldForm b = triple_form(name);
    CHECK(associates(a.module->order(), b.module->order()));
    CHECK(is_metabolic(a).kind == is_metabolic(b).kind);
    CHECK(witt_sum(WittClass(a), witt_negate(WittClass(b))).decision().kind == Kind::Yes);
  }
}

}  // TEST_SUITE
