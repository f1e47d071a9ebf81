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

#ifndef ONTOFORGE_EXPORT_HPP_
#define ONTOFORGE_EXPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/model.hpp"

namespace ontoforge::exporter {

enum class Format { turtle, dot, json };

std::optional<Format> parse_format(std::string_view s);

struct ExportOptions {
  Format format = Format::turtle;
  // Empty selects default_base_iri(). Must end in '/' or '#'.
  std::string base_iri;
  bool include_levels = false;  // DOT only
};

// urn:onto:<slug of the ontology name>/
std::string default_base_iri(const Ontology& o);
bool valid_base_iri(std::string_view iri);

// Classes, subclass axioms for genus_species, object-property assertions for
// every other relation (whole_part as `partOf`), labels, definitions and
// attributes as annotations. Sorted by subject IRI, then predicate.
// Throws InvalidBaseIri.
std::string export_turtle(const Ontology& o, const ExportOptions& options = {});

// One node statement per concept and one edge statement per edge;
// hierarchical edges solid, the rest dashed.
std::string export_dot(const Ontology& o, const ExportOptions& options = {});

// Canonical JSON: sorted keys, 2-space indent, trailing LF.
std::string export_json(const Ontology& o);

// Inverse of export_json. Unknown fields are ignored and reported through
// `notes` when given. Throws SchemaError (with a JSON-pointer path) or any
// build error.
Ontology import_json(std::string_view text, std::vector<std::string>* notes = nullptr);

std::string export_as(const Ontology& o, const ExportOptions& options);

}  // namespace ontoforge::exporter

#endif  // ONTOFORGE_EXPORT_HPP_
