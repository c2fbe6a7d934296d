#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kc/corpus.hpp"
#include "kc/serialize.hpp"

namespace py = pybind11;
using namespace kc;

namespace {

Document expect_kind(const std::string& text, DocKind kind) {
  Document d = parse_document_string(text);
  if (d.kind != kind) throw ParseError("expected a " + kind_name(kind) + " document, got " + kind_name(d.kind));
  return d;
}

KnotTriple triple_of(const std::string& text) { return decode_triple(expect_kind(text, DocKind::Triple).payload); }

std::string triple_text(const KnotTriple& T) {
  return document_json(make_document(DocKind::Triple, encode_triple(T))).dump();
}

py::list report_items(const Report& r) {
  py::list out;
  for (const auto& it : r.items()) out.append(py::make_tuple(it.name, it.ok, it.detail));
  return out;
}

WittClass witt_of(const std::string& text) {
  Document d = parse_document_string(text);
  if (d.kind == DocKind::Triple) return ac1_image(decode_triple(d.payload));
  if (d.kind == DocKind::Seifert) return WittClass(blanchfield_from_seifert(decode_seifert(d.payload)));
  throw ParseError("expected a triple or seifert document, got " + kind_name(d.kind));
}

}  // namespace

PYBIND11_MODULE(knotconc, m) {
  m.doc() = "Algebraic knot concordance toolkit";
  m.attr("format_version") = kFormatVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("corpus_names", &corpus_names);
  m.def("seifert_names", [] {
    std::vector<std::string> out;
    for (const auto& e : seifert_corpus()) out.push_back(e.name);
    return out;
  });
  m.def("example_triple", [](const std::string& name) { return triple_text(corpus_triple(name)); });
  m.def("example_seifert", [](const std::string& name) {
    return document_json(make_document(DocKind::Seifert, encode_seifert(seifert_matrix(name)))).dump();
  });
  m.def("seifert_document", [](const std::vector<std::vector<long>>& rows) {
    Matrix<Int> V(rows.size(), rows.empty() ? 0 : rows[0].size(), Int(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != V.cols()) throw std::invalid_argument("ragged Seifert matrix");
      for (std::size_t j = 0; j < V.cols(); ++j) V(i, j) = rows[i][j];
    }
    return document_json(make_document(DocKind::Seifert, encode_seifert(V))).dump();
  });

  m.def("validate_triple", [](const std::string& text) {
    Report r = validate_triple(triple_of(text));
    return py::make_tuple(r.ok(), report_items(r));
  });
  m.def("alexander_factors", [](const std::string& text) {
    KnotTriple T = triple_of(text);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < T.H->size(); ++i) out.push_back(T.H->given_factor(i).str());
    return out;
  });
  m.def("connected_sum", [](const std::string& a, const std::string& b) {
    return triple_text(connected_sum(triple_of(a), triple_of(b)));
  });
  m.def("invert", [](const std::string& a) { return triple_text(invert_triple(triple_of(a))); });

  m.def("blanchfield", [](const std::string& text) {
    WittClass w = witt_of(text);
    const BlanchfieldForm& F = w.form();
    std::vector<std::vector<std::string>> out;
    for (const auto& row : F.pairing) {
      out.emplace_back();
      for (const auto& v : row) out.back().push_back(v.str());
    }
    return out;
  });
  m.def("ac1", [](const std::string& text) {
    WittClass w = witt_of(text);
    return py::make_tuple(decision_name(w.decision().kind), w.decision().reason);
  });
}
