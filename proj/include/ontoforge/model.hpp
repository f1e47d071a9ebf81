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

#ifndef ONTOFORGE_MODEL_HPP_
#define ONTOFORGE_MODEL_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/error.hpp"

namespace ontoforge {

// The four classification dichotomies of a concept. Each axis defaults to
// unspecified.
enum class GenericSpecific { unspecified, generic, specific };
enum class WholePart { unspecified, whole, part };
enum class SingularGeneral { unspecified, singular, general };
enum class ConcreteAbstract { unspecified, concrete, abstract };

struct ConceptKind {
  GenericSpecific generic_vs_specific = GenericSpecific::unspecified;
  WholePart whole_vs_part = WholePart::unspecified;
  SingularGeneral singular_vs_general = SingularGeneral::unspecified;
  ConcreteAbstract concrete_vs_abstract = ConcreteAbstract::unspecified;

  bool operator==(const ConceptKind&) const = default;
};

inline constexpr std::array<std::string_view, 4> kKindAxes = {
    "generic_vs_specific", "whole_vs_part", "singular_vs_general", "concrete_vs_abstract"};

// Sets `axis` to `value` by name; returns false if either is unknown.
bool set_kind_axis(ConceptKind& kind, std::string_view axis, std::string_view value);
// Legal value names for an axis (including "unspecified"), empty if unknown.
std::vector<std::string_view> kind_axis_values(std::string_view axis);
// (axis, value) pairs for every axis that is not unspecified, in axis order.
std::vector<std::pair<std::string_view, std::string_view>> specified_axes(const ConceptKind& kind);
std::string describe(const ConceptKind& kind);

struct Concept {
  std::string id;  // derived from name when left empty at build time
  std::string name;
  ConceptKind kind;
  std::vector<std::string> attributes;  // order-preserving set
  bool is_category = false;
  bool defined = false;  // synchronized with the glossary by build_ontology

  bool operator==(const Concept&) const = default;
};

struct RelationType {
  std::string id;
  std::string label;
  bool is_partial_order = false;
  bool is_hierarchical = false;

  bool operator==(const RelationType&) const = default;
};

// The nine relation types every ontology starts with.
const std::vector<RelationType>& builtin_relations();
bool is_builtin_relation(std::string_view id);

// Directed typed arc. For hierarchical relations the source is the more
// specific (lower) concept and the target the more general one.
struct Edge {
  std::string source;
  std::string target;
  std::string relation;

  bool operator==(const Edge&) const = default;
};

// Canonical edge order: (source, relation, target).
bool edge_less(const Edge& a, const Edge& b);
std::string describe(const Edge& edge);

struct Definition {
  std::string concept_id;
  std::string text;
  std::vector<std::string> referenced;  // ids, first-occurrence order
  std::vector<std::string> attributes;  // mirrors the concept's attributes
  bool manual = false;

  bool operator==(const Definition&) const = default;
};

using Glossary = std::map<std::string, Definition>;

// The validated ontograph O = <X, R, F>. Immutable once built; construct
// through build_ontology.
class Ontology {
 public:
  const std::string& name() const { return name_; }
  // Sorted by id.
  const std::vector<Concept>& concepts() const { return concepts_; }
  // Sorted by (source, relation, target).
  const std::vector<Edge>& edges() const { return edges_; }
  // Built-ins in registry order, then user-declared types sorted by id.
  const std::vector<RelationType>& relations() const { return relations_; }
  std::vector<RelationType> user_relations() const;
  const Glossary& glossary() const { return glossary_; }

  const Concept* find(std::string_view id) const;
  std::optional<std::size_t> index_of(std::string_view id) const;
  const RelationType* relation(std::string_view id) const;
  bool is_hierarchical(const Edge& edge) const;
  bool is_partial_order(const Edge& edge) const;

  // Hierarchical adjacency over concept indices, each list sorted and
  // duplicate-free. parents: targets of outgoing hierarchical edges;
  // children: sources of incoming ones.
  const std::vector<std::vector<std::size_t>>& parents() const { return parents_; }
  const std::vector<std::vector<std::size_t>>& children() const { return children_; }

  bool operator==(const Ontology& other) const;

 private:
  Ontology() = default;
  friend Ontology build_ontology(std::string, std::vector<Concept>, std::vector<Edge>, Glossary,
                                 std::vector<RelationType>);

  std::string name_;
  std::vector<Concept> concepts_;
  std::vector<Edge> edges_;
  std::vector<RelationType> relations_;
  Glossary glossary_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
};

// Validates and assembles an ontology. Concepts with an empty id get one
// derived from their name. Throws Error carrying every issue found; cycle
// detection only runs once the structure is otherwise sound.
Ontology build_ontology(std::string name, std::vector<Concept> concepts, std::vector<Edge> edges,
                        Glossary glossary, std::vector<RelationType> user_relations = {});

// Runs build_ontology over the ontology's own parts.
Ontology revalidate(const Ontology& o);

// Concepts with no outgoing hierarchical edge, sorted.
std::vector<std::string> roots(const Ontology& o);
// Concepts with no incoming hierarchical edge, sorted.
std::vector<std::string> leaves(const Ontology& o);

}  // namespace ontoforge

#endif  // ONTOFORGE_MODEL_HPP_
