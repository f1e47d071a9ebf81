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

#ifndef ONTOFORGE_DSL_HPP_
#define ONTOFORGE_DSL_HPP_

// The `.onto` source format:
//
//   # comment
//   ontology "<name>"
//   relation <id> "<label>" [partial_order] [hierarchical]
//   concept "<name>" {
//     kind: <axis>=<value> ...;
//     category;
//     manual;
//     attrs: a, "b c";
//     def: "<text>";
//   }
//   edge "<source>" -<relation_id>-> "<target>"
//
// Block items are separated by ';' (the last one may omit it). Strings use
// '\"', '\\', '\n' and '\t' escapes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/error.hpp"
#include "ontoforge/model.hpp"

namespace ontoforge::dsl {

struct RelationDecl {
  std::string id;
  std::string label;
  bool partial_order = false;
  bool hierarchical = false;
  SourceSpan span;
};

struct ConceptBlock {
  std::string name;
  ConceptKind kind;
  bool category = false;
  bool manual = false;
  std::vector<std::string> attributes;
  std::optional<std::string> definition;
  SourceSpan span;
};

struct EdgeStmt {
  std::string source;
  std::string relation;
  std::string target;
  SourceSpan span;
};

struct SourceDocument {
  std::string ontology_name;
  SourceSpan name_span;
  std::vector<RelationDecl> relations;
  std::vector<ConceptBlock> concepts;
  std::vector<EdgeStmt> edges;
};

// Statements in source order. Throws Error with SyntaxError, DuplicateBlock
// or UnknownDirective; a leading UTF-8 BOM is ignored.
SourceDocument parse(std::string_view text);

// Canonical text: header, relation declarations by id, concepts by id,
// edges by (source id, relation, target id); 2-space indent, LF endings.
std::string serialize(const SourceDocument& doc);

// Copy with relations, concepts and edges in canonical order.
SourceDocument canonicalize(SourceDocument doc);

// Equality of content, ignoring spans and statement order.
bool structurally_equal(const SourceDocument& a, const SourceDocument& b);

// Resolves names to ids and builds the ontology; build issues come back
// annotated with the span of the offending statement.
Ontology lower(const SourceDocument& doc);

// Document view of an ontology; lower(to_document(o)) == o.
SourceDocument to_document(const Ontology& o);

// parse + lower.
Ontology load(std::string_view text);

}  // namespace ontoforge::dsl

#endif  // ONTOFORGE_DSL_HPP_
