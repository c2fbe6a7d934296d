#include <doctest.h>

#include "kc/corpus.hpp"
#include "kc/serialize.hpp"

using namespace kc;

namespace {

// encode -> text -> parse -> decode -> encode must reproduce the same text
template <class Enc, class Dec>
void round_trip(DocKind kind, const json& payload, Enc enc, Dec dec) {
  const std::string text = document_json(make_document(kind, payload)).dump();
  Document d = parse_document_string(text);
  CHECK(d.kind == kind);
  CHECK(document_json(make_document(kind, enc(dec(d.payload)))).dump() == text);
}

std::string error_of(const std::string& text) {
  try {
    parse_document_string(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("triple documents") {
  for (const auto& T : corpus_triples()) {
    INFO(T.label);
    round_trip(DocKind::Triple, encode_triple(T), encode_triple,
               [](const json& j) { return decode_triple(j); });
    KnotTriple back = decode_triple(encode_triple(T));
    CHECK(validate_triple(back).ok());
    CHECK(back.triad.Y == T.triad.Y);
    CHECK(back.g1 == T.g1);
  }
}

TEST_CASE("seifert, witness and solution documents") {
  for (const auto& ex : seifert_corpus())
    round_trip(DocKind::Seifert, encode_seifert(ex.V), encode_seifert, [](const json& j) { return decode_seifert(j); });

  KnotTriple T = corpus_triple("trefoil");
  WitnessDocument w{T, T, reflexive_witness(T)};
  round_trip(DocKind::Witness, encode_witness(w), encode_witness, [](const json& j) { return decode_witness(j); });
  WitnessDocument wb = decode_witness(encode_witness(w));
  CHECK(validate_concordance_witness(wb.T, wb.Tdag, wb.W).ok());

  KnotTriple U = unknot_triple();
  Representation rho = rho_from_p(U, U.H->zero());
  SolutionDocument s{U, U.H->zero(), product_solution(U, rho)};
  round_trip(DocKind::Solution, encode_solution(s), encode_solution, [](const json& j) { return decode_solution(j); });
  SolutionDocument sb = decode_solution(encode_solution(s));
  CHECK(validate_algebraic_one_solution(sb.T, rho_from_p(sb.T, sb.p), sb.S).ok());
}

TEST_CASE("complex documents at each ring") {
  Codec<Rat> cq;
  auto X = hyperbolic_example();
  round_trip(
      DocKind::Symmetric, with_ring<Rat>(encode_symmetric(X, cq)), [&](const auto& Y) { return with_ring<Rat>(encode_symmetric(Y, cq)); },
      [&](const json& j) {
        CHECK(payload_ring(j) == "Q");
        return decode_symmetric(j, cq, "payload");
      });

  Codec<LaurentPoly> cl;
  auto B = boundary_construction(rank_one_complex(stevedore_polynomial()));
  json jb = encode_symmetric(B, cl);
  CHECK(payload_ring(jb) == "QZ");
  CHECK(decode_symmetric(jb, cl, "payload").phi == B.phi);

  Codec<Int> cz;
  ChainComplex<Int> C{Int(0)};
  C.set_rank(0, 1);
  C.set_rank(1, 1);
  C.set_d(1, Matrix<Int>::diagonal({Int(3)}, Int(0)));
  CHECK(decode_complex(encode_complex(C, cz), cz, "payload") == C);

  auto P = surgery_data_from_cocycles(X, {{Rat(1), Rat(0)}});
  json jp = encode_pair(P, cq);
  SymmetricPair<Rat> Pb = decode_pair(jp, cq, "payload");
  CHECK(Pb.f == P.f);
  CHECK(Pb.phi == P.phi);
}

TEST_CASE("rational entries") {
  Codec<Rat> c;
  CHECK(c.decode(json("-3/4"), "x") == Rat(-3, 4));
  CHECK(c.decode(json(5), "x") == Rat(5));
  CHECK(c.decode(json::array({2, -6}), "x") == Rat(-1, 3));
  CHECK(c.encode(Rat(6, 4)) == json("3/2"));
  CHECK_THROWS_AS(c.decode(json("two"), "x"), ParseError);
  CHECK_THROWS_AS(c.decode(json::array({1, 0}), "x"), ParseError);
}

TEST_CASE("parse diagnostics") {
  const std::string good = document_json(make_document(DocKind::Triple, encode_triple(unknot_triple()))).dump();
  const std::string cut = good.substr(0, 40);
  CHECK(error_of(cut).find("malformed JSON at byte") != std::string::npos);

  json v7 = json::parse(good);
  v7["version"] = 7;
  try {
    parse_document_string(v7.dump());
    FAIL("expected VersionUnsupported");
  } catch (const VersionUnsupported& e) {
    CHECK(e.found() == 7);
    const std::string m = e.what();
    CHECK(m.find("7") != std::string::npos);
    CHECK(m.find("version 1") != std::string::npos);
  }

  json k = json::parse(good);
  k["kind"] = "knot";
  CHECK(error_of(k.dump()).find("knot") != std::string::npos);

  json bad = encode_triple(corpus_triple("trefoil"));
  bad["module"]["factors"][0] = json::array({json::array({0, "2"})});
  try {
    decode_triple(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("payload.module") != std::string::npos);
  }
  CHECK_THROWS_AS(decode_triple(json::object()), ParseError);
}

TEST_CASE("deterministic encoding") {
  KnotTriple T = corpus_triple("trefoil+stevedore");
  CHECK(encode_triple(T).dump() == encode_triple(corpus_triple("trefoil+stevedore")).dump());
  WittClass w = ac1_image(T);
  CHECK(witt_json(w).dump() == witt_json(ac1_image(T)).dump());
  Report r;
  r.add("a", true);
  r.add("b", false, "why");
  json j = report_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["items"].size() == 2);
  CHECK(j["items"][1]["detail"] == "why");
}

}  // TEST_SUITE
