// Copyright 2026 The ontoforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "ontoforge/cli.hpp"
#include "ontoforge/dsl.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/export.hpp"
#include "ontoforge/glossary.hpp"
#include "ontoforge/hierarchy.hpp"
#include "ontoforge/lint.hpp"
#include "ontoforge/merge.hpp"
#include "ontoforge/model.hpp"

namespace py = pybind11;
using namespace ontoforge;

namespace {

py::dict concept_dict(const Concept& c) {
  py::dict d;
  d["id"] = c.id;
  d["name"] = c.name;
  d["attributes"] = c.attributes;
  d["is_category"] = c.is_category;
  d["defined"] = c.defined;
  py::dict kind;
  for (const auto& [axis, value] : specified_axes(c.kind)) kind[py::str(std::string(axis))] = std::string(value);
  d["kind"] = kind;
  return d;
}

py::dict diagnostic_dict(const lint::Diagnostic& diag) {
  py::dict d;
  d["rule"] = diag.rule;
  d["severity"] = std::string(lint::to_string(diag.severity));
  d["subject"] = diag.subject;
  d["message"] = diag.message;
  d["suggestion"] = diag.suggestion ? py::object(py::str(*diag.suggestion)) : py::none();
  return d;
}

std::string export_with(const Ontology& o, exporter::Format format, const std::string& base_iri, bool levels) {
  exporter::ExportOptions options;
  options.format = format;
  options.base_iri = base_iri;
  options.include_levels = levels;
  return exporter::export_as(o, options);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the ontoforge ontology toolkit";

  static py::handle error_type = py::exception<Error>(m, "OntoforgeError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::vector<std::string> kinds;
      for (const auto& issue : e.issues()) kinds.emplace_back(to_string(issue.kind));
      py::object instance = py::reinterpret_borrow<py::object>(error_type)(e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      instance.attr("kinds") = kinds;
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  py::class_<Ontology>(m, "Ontology")
      .def_static("parse", [](const std::string& text) { return dsl::load(text); }, py::arg("text"),
                  "Build an ontology from source text")
      .def_static("from_json", [](const std::string& text) { return exporter::import_json(text); }, py::arg("text"))
      .def_property_readonly("name", &Ontology::name)
      .def_property_readonly("concepts",
                             [](const Ontology& o) {
                               py::list out;
                               for (const auto& c : o.concepts()) out.append(concept_dict(c));
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const Ontology& o) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : o.edges()) out.emplace_back(e.source, e.target, e.relation);
                               return out;
                             })
      .def("definition",
           [](const Ontology& o, const std::string& id) -> py::object {
             const auto it = o.glossary().find(id);
             if (it == o.glossary().end()) return py::none();
             return py::str(it->second.text);
           })
      .def("roots", [](const Ontology& o) { return roots(o); })
      .def("leaves", [](const Ontology& o) { return leaves(o); })
      .def("levels", [](const Ontology& o) { return hierarchy::rank(o).levels; })
      .def("ranking", [](const Ontology& o) { return hierarchy::rank(o).by_level; })
      .def("effective_attributes",
           [](const Ontology& o, const std::string& id) { return hierarchy::effective_attributes(o, id); })
      .def(
          "lint",
          [](const Ontology& o, const std::string& config) {
            py::list out;
            for (const auto& d : lint::lint(o, lint::parse_config(config))) out.append(diagnostic_dict(d));
            return out;
          },
          py::arg("config") = "")
      .def("to_source", [](const Ontology& o) { return dsl::serialize(dsl::to_document(o)); })
      .def(
          "to_turtle", [](const Ontology& o, const std::string& base) {
            return export_with(o, exporter::Format::turtle, base, false);
          },
          py::arg("base_iri") = "")
      .def(
          "to_dot", [](const Ontology& o, bool levels) { return export_with(o, exporter::Format::dot, "", levels); },
          py::arg("levels") = false)
      .def("to_json", [](const Ontology& o) { return exporter::export_json(o); })
      .def("__eq__", [](const Ontology& a, const Ontology& b) { return a == b; })
      .def("__len__", [](const Ontology& o) { return o.concepts().size(); })
      .def("__repr__", [](const Ontology& o) {
        std::ostringstream s;
        s << "<Ontology '" << o.name() << "': " << o.concepts().size() << " concepts, " << o.edges().size()
          << " edges>";
        return s.str();
      });

  m.def(
      "merge",
      [](const Ontology& a, const Ontology& b, const std::string& policy) {
        const auto p = merge::parse_policy(policy);
        if (!p) throw py::value_error("unknown merge policy: " + policy);
        auto result = merge::merge(a, b, *p);
        return py::make_tuple(result.ontology, merge::report_json(result.report));
      },
      py::arg("left"), py::arg("right"), py::arg("policy") = "strict",
      "Merge two ontologies; returns the result and a JSON report");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command line in process; returns (exit code, stdout, stderr)");
}
