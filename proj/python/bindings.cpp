// JSON-string interface to the checkers and builders.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ternalg/catalog.hpp"
#include "ternalg/driver.hpp"
#include "ternalg/io.hpp"
#include "ternalg/structures.hpp"

namespace py = pybind11;
using namespace ternalg;

namespace {

std::vector<Document> parse_all(const std::vector<std::string>& texts, bool complete_skew) {
  std::vector<Document> docs;
  for (const auto& t : texts) docs.push_back(parse_document(t, ParseOptions{complete_skew}));
  return docs;
}

RunOptions run_options(bool rep, const std::string& map, const std::string& anchor, std::size_t max_cx,
                       unsigned jobs) {
  RunOptions o;
  o.rep = rep;
  o.map = map;
  o.anchor = anchor;
  o.check.max_counterexamples = max_cx;
  o.check.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checkers and constructions for ternary algebra structures";

  py::object base = py::reinterpret_steal<py::object>(
      PyErr_NewException("ternalg._core.TernalgError", PyExc_ValueError, nullptr));
  m.attr("TernalgError") = base;
  m.attr("PreconditionError") = py::reinterpret_steal<py::object>(
      PyErr_NewException("ternalg._core.PreconditionError", base.ptr(), nullptr));
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const char* type_name, const Error& e, std::optional<std::string> report) {
      py::object type = py::module_::import("ternalg._core").attr(type_name);
      py::object inst = type(e.what());
      inst.attr("code") = std::string(errc_name(e.code()));
      inst.attr("report") = report ? py::object(py::str(*report)) : py::object(py::none());
      PyErr_SetObject(type.ptr(), inst.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      raise("PreconditionError", e, serialize_report(e.report()));
    } catch (const Error& e) {
      raise("TernalgError", e, std::nullopt);
    }
  });

  m.def(
      "check",
      [](const std::string& kind, const std::vector<std::string>& documents, bool rep, const std::string& map,
         std::size_t max_counterexamples, unsigned jobs, bool complete_skew) {
        const auto docs = parse_all(documents, complete_skew);
        CheckReport r;
        {
          py::gil_scoped_release release;
          r = run_check(kind, docs, run_options(rep, map, {}, max_counterexamples, jobs));
        }
        return serialize_report(r);
      },
      py::arg("kind"), py::arg("documents"), py::arg("rep") = false, py::arg("map") = "",
      py::arg("max_counterexamples") = 1, py::arg("jobs") = 1, py::arg("complete_skew") = false,
      "Runs a checker on JSON documents and returns the report as JSON.");

  m.def(
      "derive",
      [](const std::string& construction, const std::vector<std::string>& documents, const std::string& map,
         const std::string& anchor, bool complete_skew) {
        const auto docs = parse_all(documents, complete_skew);
        return serialize_document(run_derive(construction, docs, run_options(false, map, anchor, 1, 1)));
      },
      py::arg("construction"), py::arg("documents"), py::arg("map") = "", py::arg("anchor") = "",
      py::arg("complete_skew") = false, "Runs a construction and returns the derived document as JSON.");

  m.def(
      "eval_defect",
      [](const std::string& identity, const std::string& document, const std::vector<std::vector<std::string>>& args) {
        const Document d = parse_document(document);
        std::vector<Vec> vs;
        for (const auto& a : args) {
          Vec v(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) v[i] = Rational::parse(a[i]);
          vs.push_back(std::move(v));
        }
        const Vec out = eval_defect(identity, d.algebra, vs);
        std::vector<std::string> s;
        for (const auto& x : out) s.push_back(x.str());
        return s;
      },
      py::arg("identity"), py::arg("document"), py::arg("args"),
      "Defect of a named identity at vectors given as rational strings.");

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_emit", [](const std::string& name) { return serialize_document(catalog_entry(name).build()); },
        py::arg("name"));
  m.def("check_kinds", &check_kinds);
  m.def("rep_check_kinds", &rep_check_kinds);
  m.def("derive_names", &derive_names);
  m.def("identity_ids", [] { return identity_ids(); });
}
