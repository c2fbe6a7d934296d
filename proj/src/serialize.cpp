#include "kc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace kc {

namespace {

const std::vector<std::pair<DocKind, std::string>>& kind_table() {
  static const std::vector<std::pair<DocKind, std::string>> t = {
      {DocKind::LaurentMatrix, "laurent-matrix"}, {DocKind::Complex, "complex"},
      {DocKind::Symmetric, "symmetric"},          {DocKind::Pair, "pair"},
      {DocKind::Triad, "triad"},                  {DocKind::Triple, "triple"},
      {DocKind::Seifert, "seifert"},              {DocKind::Witness, "witness"},
      {DocKind::SurgeryData, "surgery-data"},     {DocKind::Solution, "solution"}};
  return t;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

json encode_qz_vector(const QZVector& v) {
  json a = json::array();
  Codec<LaurentPoly> c;
  for (const auto& x : v) a.push_back(c.encode(x));
  return a;
}

QZVector decode_qz_vector(const json& j, const std::string& path) {
  QZVector v;
  Codec<LaurentPoly> c;
  const json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(c.decode(a[i], at(path, i)));
  return v;
}

json encode_module_hom(const ModuleHom& f) {
  json imgs = json::array();
  for (const auto& x : f.images) imgs.push_back(encode_element(x));
  return imgs;
}

ModuleHom decode_module_hom(ModulePtr src, ModulePtr dst, const json& j, const std::string& path) {
  std::vector<ModuleElement> imgs;
  const json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) imgs.push_back(decode_element(*dst, a[i], at(path, i)));
  try {
    return ModuleHom::from_images(std::move(src), std::move(dst), std::move(imgs));
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

template <class R>
json encode_map_from(const ChainMap<R>& f, const Codec<R>& c) {
  json j = encode_map(f, c);
  j["source"] = encode_complex(f.source(), c);
  return j;
}

template <class R>
ChainMap<R> decode_map_from(const json& j, const ChainComplex<R>& tgt, const Codec<R>& c, const std::string& path) {
  ChainComplex<R> src = decode_complex(field(j, "source", path), c, path + ".source");
  return decode_map(j, src, tgt, c, path);
}

}  // namespace

std::string kind_name(DocKind k) {
  for (const auto& [kk, s] : kind_table())
    if (kk == k) return s;
  return "?";
}

std::optional<DocKind> kind_from_name(const std::string& s) {
  for (const auto& [k, n] : kind_table())
    if (n == s) return k;
  return std::nullopt;
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
  return *it;
}

Document parse_document_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  Document d;
  const json& v = field(j, "version", "document");
  if (!v.is_number_integer()) throw ParseError("document.version: expected an integer");
  d.version = v.get<int>();
  if (d.version != kFormatVersion) throw VersionUnsupported(d.version, kFormatVersion);
  const std::string k = as_string(field(j, "kind", "document"), "document.kind");
  auto kind = kind_from_name(k);
  if (!kind) throw ParseError("document.kind: unknown kind '" + k + "'");
  d.kind = *kind;
  d.payload = field(j, "payload", "document");
  return d;
}

Document parse_document(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_string(ss.str());
}

Document parse_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return parse_document(in);
}

json document_json(const Document& d) {
  return json{{"kind", kind_name(d.kind)}, {"version", d.version}, {"payload", d.payload}};
}

Document make_document(DocKind kind, json payload) { return Document{kind, kFormatVersion, std::move(payload)}; }

Int Codec<Int>::decode(const json& j, const std::string& path) const {
  if (j.is_number_integer()) return Int(j.get<long>());
  try {
    return Int(as_string(j, path));
  } catch (const std::invalid_argument&) {
    throw ParseError(path + ": not an integer");
  }
}

Rat Codec<Rat>::decode(const json& j, const std::string& path) const {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(path + ": expected [numerator, denominator]");
    Codec<Int> ic;
    Int num = ic.decode(j[0], path + "[0]"), den = ic.decode(j[1], path + "[1]");
    if (den == 0) throw ParseError(path + ": zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  Rat q;
  if (q.set_str(as_string(j, path), 10) != 0) throw ParseError(path + ": not a rational number");
  if (q.get_den() == 0) throw ParseError(path + ": zero denominator");
  q.canonicalize();
  return q;
}

json Codec<LaurentPoly>::encode(const LaurentPoly& x) const {
  json a = json::array();
  for (const auto& [e, c] : x.terms()) a.push_back(json::array({e, c.get_str()}));
  return a;
}

LaurentPoly Codec<LaurentPoly>::decode(const json& j, const std::string& path) const {
  LaurentPoly p;
  const json& a = as_array(j, path);
  Codec<Rat> rc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_array() || a[i].size() != 2 || !a[i][0].is_number_integer())
      throw ParseError(at(path, i) + ": expected [exponent, coefficient]");
    p += LaurentPoly::monomial(rc.decode(a[i][1], at(path, i) + "[1]"), a[i][0].get<long>());
  }
  return p;
}

json Codec<GRE>::encode(const GRE& x) const {
  json a = json::array();
  for (const auto& [g, c] : x.terms()) a.push_back(json::array({g.n, encode_element(g.h), c.get_str()}));
  return a;
}

GRE Codec<GRE>::decode(const json& j, const std::string& path) const {
  GRE x(H);
  const json& a = as_array(j, path);
  Codec<Rat> rc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = at(path, i);
    if (!a[i].is_array() || a[i].size() != 3 || !a[i][0].is_number_integer())
      throw ParseError(p + ": expected [n, h, coefficient]");
    GroupElement g{a[i][0].get<long>(), decode_element(*H, a[i][1], p + "[1]")};
    x += GRE::group(H, g, rc.decode(a[i][2], p + "[2]"));
  }
  return x;
}

json Codec<QGamma>::encode(const QGamma& x) const {
  json a = json::array();
  for (const auto& [g, c] : x.terms()) a.push_back(json::array({g.n, encode_rational_function(g.a.rep()), c.get_str()}));
  return a;
}

QGamma Codec<QGamma>::decode(const json& j, const std::string& path) const {
  QGamma x;
  const json& a = as_array(j, path);
  Codec<Rat> rc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = at(path, i);
    if (!a[i].is_array() || a[i].size() != 3 || !a[i][0].is_number_integer())
      throw ParseError(p + ": expected [n, a, coefficient]");
    GammaElement g{a[i][0].get<long>(), TorsionClass(decode_rational_function(a[i][1], p + "[1]"))};
    x += QGamma::group(g, rc.decode(a[i][2], p + "[2]"));
  }
  return x;
}

json encode_rational_function(const RationalFunction& q) {
  Codec<LaurentPoly> c;
  return json{{"num", c.encode(q.num())}, {"den", c.encode(q.den())}};
}

RationalFunction decode_rational_function(const json& j, const std::string& path) {
  Codec<LaurentPoly> c;
  LaurentPoly den = c.decode(field(j, "den", path), path + ".den");
  if (den.is_zero()) throw ParseError(path + ".den: zero denominator");
  return RationalFunction(c.decode(field(j, "num", path), path + ".num"), den);
}

json encode_module(const AlexanderModule& H) {
  json f = json::array();
  Codec<LaurentPoly> c;
  for (const auto& p : H.factors()) f.push_back(c.encode(p));
  return json{{"factors", f}, {"coefficients", H.coefficients() == Coefficients::Z ? "Z" : "Q"}};
}

ModulePtr decode_module(const json& j, const std::string& path) {
  std::vector<LaurentPoly> factors;
  Codec<LaurentPoly> c;
  const json& f = as_array(field(j, "factors", path), path + ".factors");
  for (std::size_t i = 0; i < f.size(); ++i) factors.push_back(c.decode(f[i], at(path + ".factors", i)));
  Coefficients co = Coefficients::Z;
  if (j.contains("coefficients")) {
    const std::string s = as_string(j["coefficients"], path + ".coefficients");
    if (s == "Q")
      co = Coefficients::Q;
    else if (s != "Z")
      throw ParseError(path + ".coefficients: expected Z or Q");
  }
  try {
    return validate_module(factors, co);
  } catch (const TypeKViolation& e) {
    throw ParseError(path + ".factors[" + std::to_string(e.index()) + "]: " + e.what());
  }
}

json encode_element(const ModuleElement& x) {
  Codec<LaurentPoly> c;
  json a = json::array();
  for (const auto& r : x.r) a.push_back(c.encode(r));
  return a;
}

ModuleElement decode_element(const AlexanderModule& H, const json& j, const std::string& path) {
  Codec<LaurentPoly> c;
  const json& a = as_array(j, path);
  if (a.size() != H.size())
    throw ParseError(path + ": expected " + std::to_string(H.size()) + " residues, found " + std::to_string(a.size()));
  std::vector<LaurentPoly> r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(c.decode(a[i], at(path, i)));
  return H.element(r);
}

json encode_group_element(const GroupElement& g) { return json{{"n", g.n}, {"h", encode_element(g.h)}}; }

GroupElement decode_group_element(const AlexanderModule& H, const json& j, const std::string& path) {
  return {field(j, "n", path).get<long>(), decode_element(H, field(j, "h", path), path + ".h")};
}

json encode_triple(const KnotTriple& T) {
  Codec<GRE> c{T.H};
  json xi = json::array();
  for (const auto& v : T.xi) xi.push_back(encode_qz_vector(v));
  return json{{"label", T.label},
              {"module", encode_module(*T.H)},
              {"g1", encode_group_element(T.g1)},
              {"la", encode_group_element(T.la)},
              {"triad", encode_triad(T.triad, c)},
              {"mu", encode_map(T.mu, c)},
              {"xi", xi}};
}

KnotTriple decode_triple(const json& j, const std::string& path) {
  KnotTriple T;
  T.label = j.contains("label") ? as_string(j["label"], path + ".label") : std::string();
  T.H = decode_module(field(j, "module", path), path + ".module");
  Codec<GRE> c{T.H};
  T.g1 = decode_group_element(*T.H, field(j, "g1", path), path + ".g1");
  T.la = decode_group_element(*T.H, field(j, "la", path), path + ".la");
  T.triad = decode_triad(field(j, "triad", path), c, path + ".triad");
  T.mu = decode_map(field(j, "mu", path), T.triad.Dm, T.triad.Y, c, path + ".mu");
  const json& xi = as_array(field(j, "xi", path), path + ".xi");
  for (std::size_t i = 0; i < xi.size(); ++i) T.xi.push_back(decode_qz_vector(xi[i], at(path + ".xi", i)));
  return T;
}

json encode_witness(const WitnessDocument& w) {
  const ConcordanceWitness& W = w.W;
  Codec<GRE> c{W.Hp};
  json xi = json::array();
  for (const auto& v : W.xi) xi.push_back(encode_qz_vector(v));
  return json{{"triple", encode_triple(w.T)},
              {"triple_dag", encode_triple(w.Tdag)},
              {"module", encode_module(*W.Hp)},
              {"jflat", encode_module_hom(W.jflat)},
              {"jflat_dag", encode_module_hom(W.jflat_dag)},
              {"V", encode_complex(W.V, c)},
              {"Theta", encode_structure(W.Theta, c)},
              {"j", encode_map_from(W.j, c)},
              {"j_dag", encode_map_from(W.j_dag, c)},
              {"delta", encode_map_from(W.delta, c)},
              {"gamma", encode_map_from(W.gamma, c)},
              {"gamma_dag", encode_map_from(W.gamma_dag, c)},
              {"xi", xi}};
}

WitnessDocument decode_witness(const json& j, const std::string& path) {
  WitnessDocument w;
  w.T = decode_triple(field(j, "triple", path), path + ".triple");
  w.Tdag = decode_triple(field(j, "triple_dag", path), path + ".triple_dag");
  ConcordanceWitness& W = w.W;
  W.Hp = decode_module(field(j, "module", path), path + ".module");
  Codec<GRE> c{W.Hp};
  W.jflat = decode_module_hom(w.T.H, W.Hp, field(j, "jflat", path), path + ".jflat");
  W.jflat_dag = decode_module_hom(w.Tdag.H, W.Hp, field(j, "jflat_dag", path), path + ".jflat_dag");
  W.V = decode_complex(field(j, "V", path), c, path + ".V");
  W.Theta = decode_structure(field(j, "Theta", path), W.V, c, path + ".Theta");
  W.j = decode_map_from(field(j, "j", path), W.V, c, path + ".j");
  W.j_dag = decode_map_from(field(j, "j_dag", path), W.V, c, path + ".j_dag");
  W.delta = decode_map_from(field(j, "delta", path), W.V, c, path + ".delta");
  W.gamma = decode_map_from(field(j, "gamma", path), W.V, c, path + ".gamma");
  W.gamma_dag = decode_map_from(field(j, "gamma_dag", path), W.V, c, path + ".gamma_dag");
  const json& xi = as_array(field(j, "xi", path), path + ".xi");
  for (std::size_t i = 0; i < xi.size(); ++i) W.xi.push_back(decode_qz_vector(xi[i], at(path + ".xi", i)));
  return w;
}

json encode_solution(const SolutionDocument& s) {
  Codec<QGamma> c;
  json P = json::array();
  for (const auto& g : s.S.P.generators) P.push_back(encode_element(g));
  return json{{"triple", encode_triple(s.T)},
              {"p", encode_element(s.p)},
              {"V", encode_complex(s.S.V, c)},
              {"j", encode_map(s.S.j, c)},
              {"Theta", encode_structure(s.S.Theta, c)},
              {"metaboliser", P}};
}

SolutionDocument decode_solution(const json& j, const std::string& path) {
  SolutionDocument s;
  s.T = decode_triple(field(j, "triple", path), path + ".triple");
  s.p = decode_element(*s.T.H, field(j, "p", path), path + ".p");
  Codec<QGamma> c;
  s.S.V = decode_complex(field(j, "V", path), c, path + ".V");
  Representation rho = rho_from_p(s.T, s.p);
  GammaComplex Np = induce_over_gamma(zero_surgery(s.T), rho);
  s.S.j = decode_map(field(j, "j", path), Np.C, s.S.V, c, path + ".j");
  s.S.Theta = decode_structure(field(j, "Theta", path), s.S.V, c, path + ".Theta");
  const json& P = as_array(field(j, "metaboliser", path), path + ".metaboliser");
  for (std::size_t i = 0; i < P.size(); ++i)
    s.S.P.generators.push_back(decode_element(*s.T.H, P[i], at(path + ".metaboliser", i)));
  return s;
}

json encode_seifert(const Matrix<Int>& V) {
  json rows = json::array();
  for (std::size_t i = 0; i < V.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < V.cols(); ++k) r.push_back(V(i, k).get_str());
    rows.push_back(r);
  }
  return json{{"matrix", rows}};
}

Matrix<Int> decode_seifert(const json& j, const std::string& path) {
  const json& rows = as_array(field(j, "matrix", path), path + ".matrix");
  const std::size_t n = rows.size();
  Matrix<Int> V(n, n, Int(0));
  Codec<Int> c;
  for (std::size_t i = 0; i < n; ++i) {
    const json& r = as_array(rows[i], at(path + ".matrix", i));
    if (r.size() != n) throw ParseError(at(path + ".matrix", i) + ": Seifert matrix must be square");
    for (std::size_t k = 0; k < n; ++k) V(i, k) = c.decode(r[k], at(at(path + ".matrix", i), k));
  }
  return V;
}

std::string payload_ring(const json& payload) {
  if (!payload.contains("ring")) return "QZ";
  const std::string r = as_string(payload["ring"], "payload.ring");
  if (r != "Z" && r != "Q" && r != "QZ") throw ParseError("payload.ring: expected Z, Q or QZ");
  return r;
}

json report_json(const Report& r) {
  json items = json::array();
  for (const auto& it : r.items()) {
    json x{{"check", it.name}, {"ok", it.ok}};
    if (!it.detail.empty()) x["detail"] = it.detail;
    items.push_back(x);
  }
  return json{{"ok", r.ok()}, {"items", items}};
}

json homology_json(const HomologyReport& h) {
  json d = json::object();
  for (const auto& [r, g] : h.degrees) d[std::to_string(r)] = json{{"free_rank", g.free_rank}, {"torsion", g.torsion}};
  return json{{"ring", h.ring}, {"degrees", d}};
}

json level_homology_json(const LevelHomology& h) {
  json j = json::object();
  if (h.Z) j["Z"] = homology_json(*h.Z);
  if (h.Q) j["Q"] = homology_json(*h.Q);
  if (h.QZ) j["QZ"] = homology_json(*h.QZ);
  return j;
}

json form_json(const BlanchfieldForm& F) {
  json rows = json::array();
  for (const auto& row : F.pairing) {
    json r = json::array();
    for (const auto& c : row) r.push_back(encode_rational_function(c.rep()));
    rows.push_back(r);
  }
  return json{{"module", encode_module(*F.module)}, {"pairing", rows}};
}

json decision_json(const AlexanderModule& H, const MetabolicDecision& d) {
  json j{{"decision", decision_name(d.kind)}, {"candidates_tried", d.candidates_tried}};
  if (!d.reason.empty()) j["reason"] = d.reason;
  if (d.metaboliser) {
    json g = json::array();
    for (const auto& x : d.metaboliser->generators) g.push_back(encode_element(x));
    j["metaboliser"] = g;
    (void)H;
  }
  return j;
}

json witt_json(const WittClass& W) {
  json j = form_json(W.form());
  j["validation"] = report_json(validate_blanchfield(W.form()));
  j["metabolic"] = decision_json(*W.form().module, W.decision());
  return j;
}

json family_json(const AlexanderModule& H, const CotFamily& f) {
  json entries = json::array();
  for (const auto& e : f.entries) {
    json x{{"p", encode_element(e.p)}, {"certified", e.certificate.has_value()}};
    if (e.certificate) {
      x["meridian_image"] = e.certificate->meridian_image;
      x["cone_homology_Q"] = homology_json(e.certificate->cone_Q);
    } else {
      x["refusal"] = e.refusal;
    }
    x["in_metaboliser"] = e.in_metaboliser;
    entries.push_back(x);
  }
  return json{{"label", f.label},
              {"module", encode_module(H)},
              {"form", form_json(f.form)},
              {"metabolic", decision_json(*f.form.module, f.decision)},
              {"no_metaboliser", f.no_metaboliser},
              {"p0_compatible", f.p0_compatible},
              {"entries", entries}};
}

}  // namespace kc
