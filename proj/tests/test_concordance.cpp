#include <doctest.h>

#include "kc/corpus.hpp"
#include "kc/witness.hpp"

using namespace kc;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::t(e); }

}  // namespace

TEST_SUITE("concordance") {

TEST_CASE("corpus triples validate") {
  for (const auto& T : corpus_triples()) {
    INFO(T.label);
    Report r = validate_triple(T);
    CHECK_MESSAGE(r.ok(), r.first_failure());
  }
  std::mt19937_64 rng(21);
  for (int i = 0; i < 4; ++i) CHECK(validate_triple(random_corpus_triple(rng)).ok());
}

TEST_CASE("meridian normalization") {
  KnotTriple F = corpus_triple("figure-eight");
  REQUIRE_FALSE(F.g1.h.is_zero());
  KnotTriple N = normalize_meridian(F);
  CHECK(N.g1 == GroupElement{1, F.H->zero()});
  // (1 - t)(2 - t) = -1 mod t^2 - 3t + 1
  GroupElement c{0, F.H->element({LaurentPoly(2) - t()})};
  CHECK(F.H->one_minus_t_inverse(F.g1.h) == c.h);
  CHECK(conjugate_triple(F, c).g1 == N.g1);
  CHECK(validate_triple(N).ok());
}

TEST_CASE("sum and inverse") {
  KnotTriple U = unknot_triple(), Tr = corpus_triple("trefoil"), S = corpus_triple("stevedore");
  KnotTriple TU = connected_sum(Tr, U);
  CHECK(validate_triple(TU).ok());
  CHECK(TU.H->factors() == Tr.H->factors());
  CHECK(level_homology(zero_surgery(TU).N.C) == level_homology(zero_surgery(Tr).N.C));

  KnotTriple TS = connected_sum(Tr, S);
  CHECK(validate_triple(TS).ok());
  REQUIRE(TS.H->size() == 2);
  CHECK(TS.H->factor(0) == Tr.H->factor(0));
  CHECK(TS.H->factor(1) == S.H->factor(0));
  CHECK(TS.xi.size() == 2);

  KnotTriple I = invert_triple(Tr);
  CHECK(validate_triple(I).ok());
  KnotTriple II = invert_triple(I);
  CHECK(II.triad.Phi == Tr.triad.Phi);
  CHECK(II.triad.g == Tr.triad.g);
  CHECK(II.triad.Y == Tr.triad.Y);
  CHECK(validate_triple(connected_sum(Tr, I)).ok());
}

TEST_CASE("unknot homology") {
  KnotTriple U = unknot_triple();
  auto E = boundary_torus(U).E;
  auto hz = level_homology(E.C).Z;
  REQUIRE(hz);
  CHECK(hz->at(0).free_rank == 1);
  CHECK(hz->at(1).free_rank == 2);
  CHECK(hz->at(2).free_rank == 1);
  CHECK(hz->at(0).torsion.empty());
  CHECK(hz->at(1).torsion.empty());

  auto hq = level_homology(zero_surgery(U).N.C).Q;
  REQUIRE(hq);
  for (int r = 0; r <= 3; ++r) CHECK(hq->at(r).free_rank == 1);
  CHECK(hq->at(4).free_rank == 0);
}

TEST_CASE("corrupted triples fail") {
  KnotTriple T = corpus_triple("trefoil");

  KnotTriple a = T;
  for (auto& v : a.xi)
    for (auto& x : v) x = LaurentPoly();
  CHECK_FALSE(validate_triple(a).ok());

  KnotTriple b = T;
  for (int r : {0, 1}) {
    if (b.mu.at(r).rows() == 0 || b.mu.at(r).cols() == 0) continue;
    Matrix<GRE> m = b.mu.at(r);
    m(0, 0) += GRE(T.H, Rat(1));
    b.mu.set(r, m);
    break;
  }
  CHECK_FALSE(validate_triple(b).ok());

  KnotTriple c = T;
  c.la = GroupElement{1, T.H->zero()};
  CHECK_FALSE(validate_triple(c).ok());

  KnotTriple d = T;
  for (int r = 0; r <= 3; ++r) {
    Matrix<GRE> m = d.triad.Phi.at(d.triad.Y, 0, r);
    if (m.rows() == 0 || m.cols() == 0) continue;
    m(0, 0) += GRE(T.H, Rat(1));
    d.triad.Phi.set(d.triad.Y, 0, r, m);
    break;
  }
  CHECK_FALSE(validate_triple(d).ok());
}

TEST_CASE("model matrices") {
  KnotTriple F = corpus_triple("figure-eight");
  GroupElement la2{0, F.H->element({t(2)})};
  ModelMatrices M = model_matrices(F.H, F.g1, F.la, la2);
  Report base = validate_model_matrices(M);
  CHECK_MESSAGE(base.ok(), base.first_failure());
  auto names = model_entry_names(M);
  REQUIRE(names.size() > 50);
  for (std::size_t k = 0; k < names.size(); k += 7) {
    INFO(names[k]);
    CHECK_FALSE(validate_model_matrices(mutate_model_entry(M, k, GRE(F.H, Rat(1)))).ok());
  }
}

TEST_CASE("concordance witnesses") {
  for (const auto* name : {"unknot", "trefoil", "stevedore"}) {
    INFO(std::string(name));
    KnotTriple T = corpus_triple(name);
    ConcordanceWitness W = reflexive_witness(T);
    Report r = validate_concordance_witness(T, T, W);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    ConcordanceWitness G = glue_witnesses(T, T, T, W, W);
    Report g = validate_concordance_witness(T, T, G);
    CHECK_MESSAGE(g.ok(), g.first_failure());
    if (T.H->size() == 0) continue;
    for (WitnessCorruption c : kAllCorruptions) {
      INFO(corruption_name(c));
      CHECK_FALSE(validate_concordance_witness(T, T, corrupt_witness(W, c)).ok());
    }
  }
}

}  // TEST_SUITE
