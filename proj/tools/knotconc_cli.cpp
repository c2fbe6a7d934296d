#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kc/corpus.hpp"
#include "kc/serialize.hpp"

using namespace kc;

namespace {

enum Exit { kPass = 0, kFalse = 1, kInputError = 2 };

struct Options {
  std::string coefficients;  // empty: every available level
  int epsilon = 1;
  bool epsilon_given = false;
  std::string report = "text";
  std::string out;
  bool timing = false;
};

struct Outcome {
  int exit = kPass;
  json body = json::object();
  std::optional<Document> produced;
};

std::string verdict_name(int code) { return code == kPass ? "pass" : code == kFalse ? "fail" : "error"; }

template <class F>
decltype(auto) dispatch_ring(const json& payload, F&& f) {
  const std::string r = payload_ring(payload);
  if (r == "Z") return f(Codec<Int>{});
  if (r == "Q") return f(Codec<Rat>{});
  return f(Codec<LaurentPoly>{});
}

Document load(const std::string& path, DocKind expected) {
  Document d = parse_document_file(path);
  if (d.kind != expected)
    throw ParseError(path + ": expected a " + kind_name(expected) + " document, found " + kind_name(d.kind));
  return d;
}

json level_json(const LevelHomology& h, const std::string& level) {
  if (level.empty()) return level_homology_json(h);
  const std::optional<HomologyReport>& r = level == "Z" ? h.Z : level == "Q" ? h.Q : h.QZ;
  if (!r) return json("unavailable at this level");
  return homology_json(*r);
}

Outcome from_report(const Report& r, const std::string& key = "checks") {
  Outcome o;
  o.body[key] = report_json(r);
  o.exit = r.ok() ? kPass : kFalse;
  return o;
}

// validate

template <class R>
Outcome validate_ring_document(DocKind kind, const json& p, const Codec<R>& c, const Options& opt) {
  Report rep;
  Outcome o;
  switch (kind) {
    case DocKind::LaurentMatrix: {
      Matrix<R> m = decode_matrix(field(p, "matrix", "payload"), c, "payload.matrix");
      rep.add("matrix parsed", true, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
      break;
    }
    case DocKind::Complex: {
      ChainComplex<R> C = decode_complex(p, c, "payload");
      rep.merge(validate_complex(C));
      if (rep.ok()) o.body["homology"] = level_json(level_homology(C), opt.coefficients);
      break;
    }
    case DocKind::Symmetric: {
      SymmetricComplex<R> X = decode_symmetric(p, c, "payload");
      if (opt.epsilon_given) rep.add("epsilon", X.phi.eps() == opt.epsilon, "structure has epsilon " + std::to_string(X.phi.eps()));
      rep.merge(validate_symmetric(X));
      if (validate_complex(X.C).ok()) o.body["homology"] = level_json(level_homology(X.C), opt.coefficients);
      break;
    }
    case DocKind::Pair:
    case DocKind::SurgeryData: {
      SymmetricPair<R> P = decode_pair(p, c, "payload");
      rep.merge(validate_symmetric(P, kind == DocKind::Pair));
      break;
    }
    case DocKind::Triad: {
      rep.merge(validate_triad(decode_triad(p, c, "payload")));
      break;
    }
    default:
      throw ParseError("payload: unsupported kind");
  }
  o.body["checks"] = report_json(rep);
  o.exit = rep.ok() ? kPass : kFalse;
  return o;
}

Outcome cmd_validate(const std::string& path, const Options& opt) {
  Document d = parse_document_file(path);
  Outcome o;
  switch (d.kind) {
    case DocKind::Triple: {
      KnotTriple T = decode_triple(d.payload);
      o = from_report(validate_triple(T));
      json f = json::array();
      for (const auto& x : T.H->factors()) f.push_back(x.str());
      o.body["alexander_factors"] = f;
      break;
    }
    case DocKind::Seifert: {
      BlanchfieldForm F = blanchfield_from_seifert(decode_seifert(d.payload));
      o = from_report(validate_blanchfield(F));
      break;
    }
    case DocKind::Witness: {
      WitnessDocument w = decode_witness(d.payload);
      o = from_report(validate_concordance_witness(w.T, w.Tdag, w.W));
      break;
    }
    case DocKind::Solution: {
      SolutionDocument s = decode_solution(d.payload);
      o = from_report(validate_algebraic_one_solution(s.T, rho_from_p(s.T, s.p), s.S));
      break;
    }
    default:
      o = dispatch_ring(d.payload, [&](const auto& c) { return validate_ring_document(d.kind, d.payload, c, opt); });
  }
  o.body["kind"] = kind_name(d.kind);
  return o;
}

// triple operations

Outcome triple_result(const KnotTriple& T) {
  Outcome o;
  Report r = validate_triple(T);
  o.body["checks"] = report_json(r);
  o.exit = r.ok() ? kPass : kFalse;
  o.produced = make_document(DocKind::Triple, encode_triple(T));
  return o;
}

Outcome cmd_sum(const std::vector<std::string>& paths) {
  if (paths.empty()) throw ParseError("sum: no triples given");
  KnotTriple T = decode_triple(load(paths[0], DocKind::Triple).payload);
  for (std::size_t i = 1; i < paths.size(); ++i) T = connected_sum(T, decode_triple(load(paths[i], DocKind::Triple).payload));
  return triple_result(T);
}

Outcome cmd_invert(const std::string& path) {
  return triple_result(invert_triple(decode_triple(load(path, DocKind::Triple).payload)));
}

Outcome cmd_normalize(const std::string& path) {
  return triple_result(normalize_meridian(decode_triple(load(path, DocKind::Triple).payload)));
}

template <class R, class F>
SymmetricComplex<R> lower(const SymmetricComplex<GRE>& X, const ChainComplex<R>& C, F f) {
  return SymmetricComplex<R>{C, change_coefficients(X.phi, C, f)};
}

Outcome cmd_zero_surgery(const std::string& path, const Options& opt) {
  KnotTriple T = decode_triple(load(path, DocKind::Triple).payload);
  ZeroSurgeryComplex Z = zero_surgery(T);
  Outcome o = from_report(validate_symmetric(Z.N));
  o.body["homology"] = level_json(level_homology(Z.N.C), opt.coefficients);
  if (opt.coefficients == "Z") {
    auto C = complex_Z(Z.N.C);
    if (!C) throw std::invalid_argument("zero surgery is not integral at the Z level");
    auto X = lower<Int>(Z.N, *C, [](const GRE& x) { return *augment_Z(x); });
    o.produced = make_document(DocKind::Symmetric, with_ring<Int>(encode_symmetric(X, Codec<Int>{})));
  } else if (opt.coefficients == "Q") {
    auto X = lower<Rat>(Z.N, complex_Q(Z.N.C), [](const GRE& x) { return augment_Q(x); });
    o.produced = make_document(DocKind::Symmetric, with_ring<Rat>(encode_symmetric(X, Codec<Rat>{})));
  } else {
    o.produced = make_document(DocKind::Symmetric, with_ring<LaurentPoly>(encode_symmetric(rationalize(Z.N), Codec<LaurentPoly>{})));
  }
  return o;
}

// forms

struct FormInputs {
  std::string triple, seifert, symmetric;
};

BlanchfieldForm load_form(const FormInputs& in) {
  const int given = !in.triple.empty() + !in.seifert.empty() + !in.symmetric.empty();
  if (given != 1) throw ParseError("exactly one of --triple, --seifert, --symmetric is required");
  if (!in.triple.empty()) return chain_blanchfield(zero_surgery(decode_triple(load(in.triple, DocKind::Triple).payload)));
  if (!in.seifert.empty()) return blanchfield_from_seifert(decode_seifert(load(in.seifert, DocKind::Seifert).payload));
  Document d = load(in.symmetric, DocKind::Symmetric);
  if (payload_ring(d.payload) != "QZ") throw ParseError("payload.ring: the Blanchfield form needs a QZ complex");
  return chain_blanchfield(decode_symmetric(d.payload, Codec<LaurentPoly>{}, "payload"));
}

Outcome cmd_blanchfield(const FormInputs& in) {
  BlanchfieldForm F = load_form(in);
  Outcome o = from_report(validate_blanchfield(F));
  o.body["form"] = form_json(F);
  return o;
}

Outcome cmd_ac1(const FormInputs& in) {
  WittClass W(load_form(in));
  Outcome o;
  o.body["witt_class"] = witt_json(W);
  o.exit = W.decision().kind == MetabolicDecision::Kind::Yes ? kPass : kFalse;
  return o;
}

// surgery

Outcome cmd_surgery(const std::string& xpath, const std::string& ppath, const Options& opt) {
  Document dx = load(xpath, DocKind::Symmetric);
  Document dp = load(ppath, DocKind::SurgeryData);
  if (payload_ring(dx.payload) != payload_ring(dp.payload)) throw ParseError("surgery data and complex have different rings");
  return dispatch_ring(dx.payload, [&](const auto& c) {
    using R = std::decay_t<decltype(c.zero())>;
    SymmetricComplex<R> X = decode_symmetric(dx.payload, c, "payload");
    SurgeryData<R> P = decode_pair(dp.payload, c, "payload");
    SymmetricComplex<R> Y = algebraic_surgery(X, P);
    Outcome o = from_report(validate_symmetric(Y));
    o.body["homology_before"] = level_json(level_homology(X.C), opt.coefficients);
    o.body["homology_after"] = level_json(level_homology(Y.C), opt.coefficients);
    o.produced = make_document(DocKind::Symmetric, with_ring<R>(encode_symmetric(Y, c)));
    return o;
  });
}

// cot

Outcome cmd_cot_family(const std::string& path, long bound) {
  KnotTriple T = decode_triple(load(path, DocKind::Triple).payload);
  CotFamily f = assemble_cot_family(T, bound);
  Outcome o;
  o.body["family"] = family_json(*T.H, f);
  return o;
}

Outcome cmd_check_witness(const std::string& path) {
  WitnessDocument w = decode_witness(load(path, DocKind::Witness).payload);
  return from_report(validate_concordance_witness(w.T, w.Tdag, w.W));
}

Outcome cmd_check_solution(const std::string& path) {
  SolutionDocument s = decode_solution(load(path, DocKind::Solution).payload);
  return from_report(validate_algebraic_one_solution(s.T, rho_from_p(s.T, s.p), s.S));
}

// example documents

Outcome cmd_example(const std::string& kind, const std::string& name, bool glued, const Options& opt) {
  Outcome o;
  if (kind == "triple") {
    o.produced = make_document(DocKind::Triple, encode_triple(corpus_triple(name)));
  } else if (kind == "seifert") {
    o.produced = make_document(DocKind::Seifert, encode_seifert(seifert_matrix(name)));
  } else if (kind == "witness") {
    KnotTriple T = corpus_triple(name);
    ConcordanceWitness W = reflexive_witness(T);
    if (glued) W = glue_witnesses(T, T, T, W, W);
    o.produced = make_document(DocKind::Witness, encode_witness({T, T, W}));
  } else if (kind == "solution") {
    KnotTriple T = corpus_triple(name);
    ModuleElement p = T.H->zero();
    o.produced = make_document(DocKind::Solution, encode_solution({T, p, product_solution(T, rho_from_p(T, p))}));
  } else if (kind == "symmetric") {
    if (name == "hyperbolic") {
      o.produced = make_document(DocKind::Symmetric, with_ring<Rat>(encode_symmetric(hyperbolic_example(opt.epsilon), Codec<Rat>{})));
    } else {
      KnotTriple T = corpus_triple(name);
      if (T.H->size() != 1) throw std::invalid_argument("rank-one complex needs a single-factor corpus entry");
      auto dX = boundary_construction(rank_one_complex(T.H->given_factor(0)));
      o.produced = make_document(DocKind::Symmetric, with_ring<LaurentPoly>(encode_symmetric(dX, Codec<LaurentPoly>{})));
    }
  } else if (kind == "surgery-data") {
    if (name != "hyperbolic") throw std::invalid_argument("unknown surgery-data example '" + name + "'");
    auto X = hyperbolic_example(opt.epsilon);
    o.produced = make_document(DocKind::SurgeryData,
                               with_ring<Rat>(encode_pair(surgery_data_from_cocycles(X, {{Rat(1), Rat(0)}}), Codec<Rat>{})));
  } else {
    throw std::invalid_argument("unknown example kind '" + kind + "'");
  }
  return o;
}

// output

void print_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && v.contains("items") && v.contains("ok")) {
      os << pad << k << ": " << (v["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
      for (const auto& it : v["items"]) {
        os << pad << "  [" << (it["ok"].get<bool>() ? "ok" : "FAIL") << "] " << it["check"].get<std::string>();
        if (it.contains("detail")) os << ": " << it["detail"].get<std::string>();
        os << "\n";
      }
    } else if (v.is_object()) {
      os << pad << k << ":\n";
      print_text(os, v, indent + 2);
    } else if (v.is_string()) {
      os << pad << k << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << k << ": " << v.dump() << "\n";
    }
  }
}

int emit(const std::string& command, const std::vector<std::string>& inputs, Outcome o, const Options& opt,
         double seconds) {
  json rep;
  rep["format_version"] = kFormatVersion;
  rep["command"] = command;
  rep["inputs"] = inputs;
  rep["verdict"] = verdict_name(o.exit);
  rep["exit_code"] = o.exit;
  for (const auto& [k, v] : o.body.items()) rep[k] = v;
  if (opt.timing) rep["seconds"] = seconds;
  if (o.produced) {
    json doc = document_json(*o.produced);
    if (!opt.out.empty()) {
      std::ofstream f(opt.out);
      if (!f) throw ParseError("cannot write " + opt.out);
      f << doc.dump(2) << "\n";
      rep["written"] = opt.out;
    } else {
      rep["document"] = doc;
    }
  }
  if (opt.report == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    json body = rep;
    json doc;
    if (body.contains("document")) {
      doc = body["document"];
      body.erase("document");
    }
    print_text(std::cout, body, 0);
    if (!doc.is_null()) std::cout << doc.dump(2) << "\n";
  }
  return o.exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic knot concordance toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string eps_text;
  app.add_option("--coefficients", opt.coefficients, "Homology level for reports and the zero-surgery output ring")
      ->check(CLI::IsMember({"Z", "Q", "QZ"}));
  app.add_option("--epsilon", eps_text, "Symmetric sign (+1 or -1)")->check(CLI::IsMember({"+1", "1", "-1"}));
  app.add_option("--report", opt.report, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "Write the produced document here");
  app.add_flag("--timing", opt.timing, "Include wall-clock time in the report");

  std::string single, second;
  std::vector<std::string> many;
  FormInputs forms;
  long bound = 1;
  std::string ex_kind, ex_name;
  bool glued = false;

  auto* validate = app.add_subcommand("validate", "Validate any document");
  std::vector<std::string> vdocs(8);
  validate->add_option("document", vdocs[0], "Input document");
  const char* vkinds[] = {"--triple", "--seifert", "--complex", "--symmetric", "--pair", "--witness", "--solution"};
  for (int i = 0; i < 7; ++i) validate->add_option(vkinds[i], vdocs[i + 1], "Input document");
  auto* sum = app.add_subcommand("sum", "Connected sum of triples");
  sum->add_option("--triples", many, "Triples to add")->required()->expected(1, -1);
  auto* invert = app.add_subcommand("invert", "Inverse triple");
  invert->add_option("--triple", single)->required();
  auto* normalize = app.add_subcommand("normalize", "Conjugate the meridian to (1, 0)");
  normalize->add_option("--triple", single)->required();
  auto* zs = app.add_subcommand("zero-surgery", "Zero surgery complex of a triple");
  zs->add_option("--triple", single)->required();
  auto* bl = app.add_subcommand("blanchfield", "Blanchfield form");
  auto* ac1 = app.add_subcommand("ac1", "Witt class and metabolic decision");
  for (auto* s : {bl, ac1}) {
    s->add_option("--triple", forms.triple);
    s->add_option("--seifert", forms.seifert);
    s->add_option("--symmetric", forms.symmetric);
  }
  auto* surgery = app.add_subcommand("surgery", "Algebraic surgery");
  surgery->add_option("--symmetric", single)->required();
  surgery->add_option("--data", second)->required();
  auto* cot = app.add_subcommand("cot-family", "Representations, certificates and metaboliser compatibility");
  cot->add_option("--triple", single)->required();
  cot->add_option("--bound", bound, "Scalar multiples of generators to try")->check(CLI::Range(0L, 10L));
  auto* cw = app.add_subcommand("check-witness", "Validate a concordance witness");
  cw->add_option("--witness", single)->required();
  auto* cs = app.add_subcommand("check-solution", "Validate an algebraic one-solution");
  cs->add_option("--solution", single)->required();
  auto* ex = app.add_subcommand("example", "Write a built-in example document");
  ex->add_option("kind", ex_kind, "triple, seifert, witness, solution, symmetric or surgery-data")->required();
  ex->add_option("name", ex_name, "Corpus name")->required();
  ex->add_flag("--glued", glued, "Witness: glue the reflexive witness with itself");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }
  if (!eps_text.empty()) {
    opt.epsilon = eps_text == "-1" ? -1 : 1;
    opt.epsilon_given = true;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    std::vector<std::string> inputs;
    if (sub == validate) {
      for (const auto& v : vdocs)
        if (!v.empty()) inputs.push_back(v);
      if (inputs.size() != 1) throw ParseError("validate: give exactly one document");
      single = inputs[0];
      o = cmd_validate(single, opt);
    } else if (sub == sum) {
      inputs = many;
      o = cmd_sum(many);
    } else if (sub == invert) {
      inputs = {single};
      o = cmd_invert(single);
    } else if (sub == normalize) {
      inputs = {single};
      o = cmd_normalize(single);
    } else if (sub == zs) {
      inputs = {single};
      o = cmd_zero_surgery(single, opt);
    } else if (sub == bl || sub == ac1) {
      for (const auto& s : {forms.triple, forms.seifert, forms.symmetric})
        if (!s.empty()) inputs.push_back(s);
      o = sub == bl ? cmd_blanchfield(forms) : cmd_ac1(forms);
    } else if (sub == surgery) {
      inputs = {single, second};
      o = cmd_surgery(single, second, opt);
    } else if (sub == cot) {
      inputs = {single};
      o = cmd_cot_family(single, bound);
    } else if (sub == cw) {
      inputs = {single};
      o = cmd_check_witness(single);
    } else if (sub == cs) {
      inputs = {single};
      o = cmd_check_solution(single);
    } else {
      o = cmd_example(ex_kind, ex_name, glued, opt);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(name, inputs, std::move(o), opt, secs);
  } catch (const std::exception& e) {
    std::cerr << "knotconc " << name << ": error: " << e.what() << "\n";
    return kInputError;
  }
}
