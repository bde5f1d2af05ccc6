// JSON-in/JSON-out bridge; the Python package wraps these with json.loads.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgclass/checks.hpp"
#include "sgclass/families.hpp"
#include "sgclass/oracle.hpp"
#include "sgclass/report.hpp"

namespace py = pybind11;
using namespace sgclass;

namespace {

PyObject* error_type = nullptr;

SemigroupDocument parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return parse_document(j);
}

std::string classify_json(const std::string& doc, std::optional<Int> max_degree, Int multiple_bound) {
  ClassifyOptions o;
  o.max_degree = max_degree;
  o.multiple_bound = multiple_bound;
  return to_json(classify(parse(doc), o)).dump();
}

std::string fixture_json(const std::string& name) {
  const auto& f = fixture(name);
  nlohmann::ordered_json j = to_json(f.document);
  nlohmann::ordered_json ex = nlohmann::ordered_json::object();
  for (const auto& e : f.expected) ex[e.field] = {{"value", e.value}, {"source", to_string(e.source)}};
  j["expected"] = ex;
  return j.dump();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_catalog()) out.push_back(f.name);
  return out;
}

std::pair<std::string, std::string> check(const std::string& id, const std::string& doc_text) {
  const CheckId cid = parse_check_id(id);
  const auto doc = parse(doc_text);
  const auto out = run_check(cid, classify(doc), to_semigroup(doc));
  return {to_string(out.verdict), out.detail};
}

py::dict oracle(const std::string& doc_text, std::size_t samples, std::uint64_t seed) {
  const auto s = to_semigroup(parse(doc_text));
  const auto t = build_certified_staircase(s, 64);
  const auto r = oracle_compare(s, t, samples, seed);
  py::dict d;
  d["samples"] = r.samples;
  d["members"] = r.members;
  std::vector<std::vector<Int>> mism;
  for (const auto& v : r.mismatches) mism.push_back(v.coords());
  d["mismatches"] = mism;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Owned by the module; the translator only borrows it.
  error_type = PyErr_NewException("sgclass._core.SgclassError", PyExc_ValueError, nullptr);
  m.add_object("SgclassError", py::handle(error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("classify_json", &classify_json, py::arg("document"), py::arg("max_degree") = py::none(),
        py::arg("multiple_bound") = 64, py::call_guard<py::gil_scoped_release>());
  m.def("family_json", [](Int n, Int k) { return to_json(family_document(n, k)).dump(); }, py::arg("n"),
        py::arg("k"));
  m.def("fixture_json", &fixture_json, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("check", &check, py::arg("id"), py::arg("document"), py::call_guard<py::gil_scoped_release>());
  m.def("check_ids", [] {
    std::vector<std::string> out;
    for (CheckId id : all_checks()) out.emplace_back(check_key(id));
    return out;
  });
  m.def("oracle", &oracle, py::arg("document"), py::arg("samples") = 1000, py::arg("seed") = 1);
}
