#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kc/cot.hpp"
#include "kc/surgery.hpp"
#include "kc/witness.hpp"

namespace kc {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VersionUnsupported : public ParseError {
 public:
  VersionUnsupported(int found, int supported)
      : ParseError("document version " + std::to_string(found) + " is not supported (this build reads version " +
                   std::to_string(supported) + ")"),
        found_(found) {}
  int found() const { return found_; }

 private:
  int found_;
};

enum class DocKind { LaurentMatrix, Complex, Symmetric, Pair, Triad, Triple, Seifert, Witness, SurgeryData, Solution };
std::string kind_name(DocKind k);
std::optional<DocKind> kind_from_name(const std::string& s);

struct Document {
  DocKind kind = DocKind::Triple;
  int version = kFormatVersion;
  json payload;
};

Document parse_document(std::istream& in);
Document parse_document_string(const std::string& text);
Document parse_document_file(const std::string& path);
json document_json(const Document& d);
Document make_document(DocKind kind, json payload);

// Field access with path-qualified diagnostics.
const json& field(const json& j, const std::string& key, const std::string& path);

// Element codecs. The group ring codec needs the module its elements live over.
template <class R>
struct Codec;

template <>
struct Codec<Int> {
  static constexpr const char* tag = "Z";
  json encode(const Int& x) const { return x.get_str(); }
  Int decode(const json& j, const std::string& path) const;
  Int zero() const { return Int(0); }
};

template <>
struct Codec<Rat> {
  static constexpr const char* tag = "Q";
  json encode(const Rat& x) const {
    Rat q = x;
    q.canonicalize();
    return q.get_str();
  }
  Rat decode(const json& j, const std::string& path) const;
  Rat zero() const { return Rat(0); }
};

template <>
struct Codec<LaurentPoly> {
  static constexpr const char* tag = "QZ";
  json encode(const LaurentPoly& x) const;
  LaurentPoly decode(const json& j, const std::string& path) const;
  LaurentPoly zero() const { return LaurentPoly(); }
};

template <>
struct Codec<GRE> {
  static constexpr const char* tag = "ZH";
  ModulePtr H;
  json encode(const GRE& x) const;
  GRE decode(const json& j, const std::string& path) const;
  GRE zero() const { return GRE(H); }
};

template <>
struct Codec<QGamma> {
  static constexpr const char* tag = "QGamma";
  json encode(const QGamma& x) const;
  QGamma decode(const json& j, const std::string& path) const;
  QGamma zero() const { return QGamma(); }
};

json encode_rational_function(const RationalFunction& q);
RationalFunction decode_rational_function(const json& j, const std::string& path);
json encode_module(const AlexanderModule& H);
ModulePtr decode_module(const json& j, const std::string& path);
json encode_element(const ModuleElement& x);
ModuleElement decode_element(const AlexanderModule& H, const json& j, const std::string& path);
json encode_group_element(const GroupElement& g);
GroupElement decode_group_element(const AlexanderModule& H, const json& j, const std::string& path);

template <class R>
json encode_matrix(const Matrix<R>& m, const Codec<R>& c) {
  json e = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) e.push_back(c.encode(m(i, k)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

template <class R>
Matrix<R> decode_matrix(const json& j, const Codec<R>& c, const std::string& path) {
  const auto rows = field(j, "rows", path).template get<std::size_t>();
  const auto cols = field(j, "cols", path).template get<std::size_t>();
  const json& e = field(j, "entries", path);
  if (!e.is_array() || e.size() != rows * cols)
    throw ParseError(path + ".entries: expected " + std::to_string(rows * cols) + " entries");
  Matrix<R> m(rows, cols, c.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = c.decode(e[i * cols + k], path + ".entries[" + std::to_string(i * cols + k) + "]");
  return m;
}

template <class R>
json encode_complex(const ChainComplex<R>& C, const Codec<R>& c) {
  json ranks = json::array(), d = json::array();
  for (const auto& [r, n] : C.ranks()) ranks.push_back(json::array({r, n}));
  for (const auto& [r, m] : C.boundaries()) d.push_back(json{{"degree", r}, {"matrix", encode_matrix(m, c)}});
  return json{{"ranks", ranks}, {"d", d}};
}

template <class R>
ChainComplex<R> decode_complex(const json& j, const Codec<R>& c, const std::string& path) {
  ChainComplex<R> C(c.zero());
  for (const auto& rk : field(j, "ranks", path)) {
    if (!rk.is_array() || rk.size() != 2) throw ParseError(path + ".ranks: expected [degree, rank] pairs");
    C.set_rank(rk[0].get<int>(), rk[1].get<std::size_t>());
  }
  const json& d = field(j, "d", path);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string p = path + ".d[" + std::to_string(i) + "]";
    const int r = field(d[i], "degree", p).template get<int>();
    try {
      C.set_d(r, decode_matrix(field(d[i], "matrix", p), c, p + ".matrix"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(p + ": " + e.what());
    }
  }
  return C;
}

template <class R>
json encode_map(const ChainMap<R>& f, const Codec<R>& c) {
  json comps = json::array();
  for (const auto& [r, m] : f.components()) comps.push_back(json{{"degree", r}, {"matrix", encode_matrix(m, c)}});
  return json{{"shift", f.shift()}, {"components", comps}};
}

template <class R>
ChainMap<R> decode_map(const json& j, const ChainComplex<R>& src, const ChainComplex<R>& tgt, const Codec<R>& c,
                       const std::string& path) {
  ChainMap<R> f(src, tgt, field(j, "shift", path).template get<int>());
  const json& comps = field(j, "components", path);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = path + ".components[" + std::to_string(i) + "]";
    try {
      f.set(field(comps[i], "degree", p).template get<int>(), decode_matrix(field(comps[i], "matrix", p), c, p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(p + ": " + e.what());
    }
  }
  return f;
}

template <class R>
json encode_structure(const SymmetricStructure<R>& phi, const Codec<R>& c) {
  json comps = json::array();
  for (const auto& [s, m] : phi.components())
    for (const auto& [r, x] : m) comps.push_back(json{{"s", s}, {"r", r}, {"matrix", encode_matrix(x, c)}});
  return json{{"n", phi.n()}, {"epsilon", phi.eps()}, {"components", comps}};
}

template <class R>
SymmetricStructure<R> decode_structure(const json& j, const ChainComplex<R>& C, const Codec<R>& c,
                                       const std::string& path) {
  const int eps = field(j, "epsilon", path).template get<int>();
  if (eps != 1 && eps != -1) throw ParseError(path + ".epsilon: expected +1 or -1");
  SymmetricStructure<R> phi(field(j, "n", path).template get<int>(), eps);
  const json& comps = field(j, "components", path);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = path + ".components[" + std::to_string(i) + "]";
    try {
      phi.set(C, field(comps[i], "s", p).template get<int>(), field(comps[i], "r", p).template get<int>(),
              decode_matrix(field(comps[i], "matrix", p), c, p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(p + ": " + e.what());
    }
  }
  return phi;
}

template <class R>
json encode_symmetric(const SymmetricComplex<R>& X, const Codec<R>& c) {
  return json{{"complex", encode_complex(X.C, c)}, {"phi", encode_structure(X.phi, c)}};
}

template <class R>
SymmetricComplex<R> decode_symmetric(const json& j, const Codec<R>& c, const std::string& path) {
  SymmetricComplex<R> X;
  X.C = decode_complex(field(j, "complex", path), c, path + ".complex");
  X.phi = decode_structure(field(j, "phi", path), X.C, c, path + ".phi");
  return X;
}

template <class R>
json encode_pair(const SymmetricPair<R>& P, const Codec<R>& c) {
  return json{{"C", encode_complex(P.C(), c)},
              {"D", encode_complex(P.D(), c)},
              {"f", encode_map(P.f, c)},
              {"dphi", encode_structure(P.dphi, c)},
              {"phi", encode_structure(P.phi, c)}};
}

template <class R>
SymmetricPair<R> decode_pair(const json& j, const Codec<R>& c, const std::string& path) {
  ChainComplex<R> C = decode_complex(field(j, "C", path), c, path + ".C");
  ChainComplex<R> D = decode_complex(field(j, "D", path), c, path + ".D");
  SymmetricPair<R> P;
  P.f = decode_map(field(j, "f", path), C, D, c, path + ".f");
  P.dphi = decode_structure(field(j, "dphi", path), D, c, path + ".dphi");
  P.phi = decode_structure(field(j, "phi", path), C, c, path + ".phi");
  return P;
}

template <class R>
json encode_triad(const SymmetricTriad<R>& T, const Codec<R>& c) {
  return json{{"C", encode_complex(T.C, c)},       {"Dm", encode_complex(T.Dm, c)},
              {"Dp", encode_complex(T.Dp, c)},     {"Y", encode_complex(T.Y, c)},
              {"im", encode_map(T.im, c)},         {"ip", encode_map(T.ip, c)},
              {"fm", encode_map(T.fm, c)},         {"fp", encode_map(T.fp, c)},
              {"g", encode_map(T.g, c)},           {"phi", encode_structure(T.phi, c)},
              {"dphim", encode_structure(T.dphim, c)}, {"dphip", encode_structure(T.dphip, c)},
              {"Phi", encode_structure(T.Phi, c)}};
}

template <class R>
SymmetricTriad<R> decode_triad(const json& j, const Codec<R>& c, const std::string& path) {
  SymmetricTriad<R> T;
  T.C = decode_complex(field(j, "C", path), c, path + ".C");
  T.Dm = decode_complex(field(j, "Dm", path), c, path + ".Dm");
  T.Dp = decode_complex(field(j, "Dp", path), c, path + ".Dp");
  T.Y = decode_complex(field(j, "Y", path), c, path + ".Y");
  T.im = decode_map(field(j, "im", path), T.C, T.Dm, c, path + ".im");
  T.ip = decode_map(field(j, "ip", path), T.C, T.Dp, c, path + ".ip");
  T.fm = decode_map(field(j, "fm", path), T.Dm, T.Y, c, path + ".fm");
  T.fp = decode_map(field(j, "fp", path), T.Dp, T.Y, c, path + ".fp");
  T.g = decode_map(field(j, "g", path), T.C, T.Y, c, path + ".g");
  T.phi = decode_structure(field(j, "phi", path), T.C, c, path + ".phi");
  T.dphim = decode_structure(field(j, "dphim", path), T.Dm, c, path + ".dphim");
  T.dphip = decode_structure(field(j, "dphip", path), T.Dp, c, path + ".dphip");
  T.Phi = decode_structure(field(j, "Phi", path), T.Y, c, path + ".Phi");
  return T;
}

json encode_triple(const KnotTriple& T);
KnotTriple decode_triple(const json& j, const std::string& path = "payload");

struct WitnessDocument {
  KnotTriple T, Tdag;
  ConcordanceWitness W;
};
json encode_witness(const WitnessDocument& w);
WitnessDocument decode_witness(const json& j, const std::string& path = "payload");

struct SolutionDocument {
  KnotTriple T;
  ModuleElement p;
  OneSolution S;
};
json encode_solution(const SolutionDocument& s);
// Rebuilds the representation from the triple's Blanchfield form.
SolutionDocument decode_solution(const json& j, const std::string& path = "payload");

json encode_seifert(const Matrix<Int>& V);
Matrix<Int> decode_seifert(const json& j, const std::string& path = "payload");

// Coefficient ring of complex-like payloads ("Z", "Q" or "QZ").
std::string payload_ring(const json& payload);
template <class R>
json with_ring(json j) {
  j["ring"] = Codec<R>::tag;
  return j;
}

// Reports
json report_json(const Report& r);
json homology_json(const HomologyReport& h);
json level_homology_json(const LevelHomology& h);
json form_json(const BlanchfieldForm& F);
json decision_json(const AlexanderModule& H, const MetabolicDecision& d);
json witt_json(const WittClass& W);
json family_json(const AlexanderModule& H, const CotFamily& f);

}  // namespace kc
