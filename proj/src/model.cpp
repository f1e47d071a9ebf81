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

#include "ontoforge/model.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ontoforge/text.hpp"

namespace ontoforge {

namespace {

constexpr std::array<std::array<std::string_view, 3>, 4> kAxisValues = {{
    {"unspecified", "generic", "specific"},
    {"unspecified", "whole", "part"},
    {"unspecified", "singular", "general"},
    {"unspecified", "concrete", "abstract"},
}};

std::array<int, 4> axis_codes(const ConceptKind& k) {
  return {static_cast<int>(k.generic_vs_specific), static_cast<int>(k.whole_vs_part),
          static_cast<int>(k.singular_vs_general), static_cast<int>(k.concrete_vs_abstract)};
}

std::optional<std::size_t> axis_index(std::string_view axis) {
  for (std::size_t i = 0; i < kKindAxes.size(); ++i) {
    if (kKindAxes[i] == axis) return i;
  }
  return std::nullopt;
}

Issue issue(ErrorKind kind, std::string message) {
  return Issue{kind, std::move(message), std::nullopt, {}, {}, {}, {}};
}

}  // namespace

bool set_kind_axis(ConceptKind& kind, std::string_view axis, std::string_view value) {
  const auto a = axis_index(axis);
  if (!a) return false;
  const auto& values = kAxisValues[*a];
  const auto it = std::find(values.begin(), values.end(), value);
  if (it == values.end()) return false;
  const int code = static_cast<int>(it - values.begin());
  switch (*a) {
    case 0: kind.generic_vs_specific = static_cast<GenericSpecific>(code); break;
    case 1: kind.whole_vs_part = static_cast<WholePart>(code); break;
    case 2: kind.singular_vs_general = static_cast<SingularGeneral>(code); break;
    default: kind.concrete_vs_abstract = static_cast<ConcreteAbstract>(code); break;
  }
  return true;
}

std::vector<std::string_view> kind_axis_values(std::string_view axis) {
  const auto a = axis_index(axis);
  if (!a) return {};
  return {kAxisValues[*a].begin(), kAxisValues[*a].end()};
}

std::vector<std::pair<std::string_view, std::string_view>> specified_axes(const ConceptKind& kind) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  const auto codes = axis_codes(kind);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] != 0) out.emplace_back(kKindAxes[i], kAxisValues[i][codes[i]]);
  }
  return out;
}

std::string describe(const ConceptKind& kind) {
  std::string out;
  for (const auto& [axis, value] : specified_axes(kind)) {
    if (!out.empty()) out += " ";
    out += std::string(axis) + "=" + std::string(value);
  }
  return out.empty() ? "unspecified" : out;
}

const std::vector<RelationType>& builtin_relations() {
  static const std::vector<RelationType> kRegistry = {
      {"genus_species", "род-вид", true, true},
      {"whole_part", "целое-часть", false, true},
      {"categorical", "категорное_отношение", false, true},
      {"set_element", "множество-элемент", false, true},
      {"participant", "участник", false, false},
      {"regulates", "регламентировать", false, false},
      {"is_characteristic_of", "быть_характеристикой", false, false},
      {"developed_by", "разработать", false, false},
      {"contained_in", "содержаться_в", false, false},
  };
  return kRegistry;
}

bool is_builtin_relation(std::string_view id) {
  const auto& reg = builtin_relations();
  return std::any_of(reg.begin(), reg.end(), [&](const RelationType& r) { return r.id == id; });
}

bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.source, a.relation, a.target) < std::tie(b.source, b.relation, b.target);
}

std::string describe(const Edge& edge) {
  return edge.source + " -" + edge.relation + "-> " + edge.target;
}

std::vector<RelationType> Ontology::user_relations() const {
  std::vector<RelationType> out;
  for (const auto& r : relations_) {
    if (!is_builtin_relation(r.id)) out.push_back(r);
  }
  return out;
}

const Concept* Ontology::find(std::string_view id) const {
  const auto idx = index_of(id);
  return idx ? &concepts_[*idx] : nullptr;
}

std::optional<std::size_t> Ontology::index_of(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const RelationType* Ontology::relation(std::string_view id) const {
  for (const auto& r : relations_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool Ontology::is_hierarchical(const Edge& edge) const {
  const auto* r = relation(edge.relation);
  return r != nullptr && r->is_hierarchical;
}

bool Ontology::is_partial_order(const Edge& edge) const {
  const auto* r = relation(edge.relation);
  return r != nullptr && r->is_partial_order;
}

bool Ontology::operator==(const Ontology& other) const {
  return name_ == other.name_ && concepts_ == other.concepts_ && edges_ == other.edges_ &&
         relations_ == other.relations_ && glossary_ == other.glossary_;
}

namespace {

// Finds one cycle among `pending` nodes (those Kahn elimination could not
// remove), starting from the smallest index. Returned path repeats its first
// node at the end.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& parents,
                                    const std::vector<bool>& pending) {
  const std::size_t n = parents.size();
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  std::vector<std::size_t> result;

  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    color[v] = 1;
    stack.push_back(v);
    for (std::size_t p : parents[v]) {
      if (!pending[p]) continue;
      if (color[p] == 1) {
        const auto from = std::find(stack.begin(), stack.end(), p);
        result.assign(from, stack.end());
        result.push_back(p);
        return true;
      }
      if (color[p] == 0 && self(self, p)) return true;
    }
    stack.pop_back();
    color[v] = 2;
    return false;
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (pending[v] && color[v] == 0 && dfs(dfs, v)) break;
  }
  return result;
}

}  // namespace

Ontology build_ontology(std::string name, std::vector<Concept> concepts, std::vector<Edge> edges,
                        Glossary glossary, std::vector<RelationType> user_relations) {
  std::vector<Issue> issues;

  if (concepts.empty()) {
    throw Error(issue(ErrorKind::EmptyConceptSet, "ontology '" + name + "' has no concepts"));
  }

  // Relation registry.
  std::vector<RelationType> relations = builtin_relations();
  std::sort(user_relations.begin(), user_relations.end(),
            [](const RelationType& a, const RelationType& b) { return a.id < b.id; });
  for (const auto& r : user_relations) {
    if (r.id.empty()) {
      issues.push_back(issue(ErrorKind::InvalidRelation, "relation type with empty id"));
      continue;
    }
    if (r.is_partial_order && !r.is_hierarchical) {
      issues.push_back(issue(ErrorKind::InvalidRelation,
                             "relation '" + r.id + "' is a partial order but not hierarchical"));
      continue;
    }
    const bool seen = std::any_of(relations.begin(), relations.end(),
                                  [&](const RelationType& x) { return x.id == r.id; });
    if (seen) {
      issues.push_back(issue(ErrorKind::DuplicateRelation, "relation '" + r.id + "' is already declared"));
      continue;
    }
    relations.push_back(r);
  }
  auto relation_known = [&](const std::string& id) {
    return std::any_of(relations.begin(), relations.end(), [&](const RelationType& x) { return x.id == id; });
  };

  // Concepts.
  std::map<std::string, std::size_t, std::less<>> first_index;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    auto& c = concepts[i];
    const auto trimmed = text::trim(c.name);
    if (trimmed.empty()) {
      auto is = issue(ErrorKind::EmptyConceptName, "concept name is empty");
      is.concept_index = i;
      issues.push_back(std::move(is));
      continue;
    }
    if (c.id.empty()) c.id = text::slugify(c.name);
    if (c.id.empty()) {
      auto is = issue(ErrorKind::InvalidConceptId, "cannot derive an id from name '" + c.name + "'");
      is.concept_index = i;
      issues.push_back(std::move(is));
      continue;
    }
    std::vector<std::string> attrs;
    for (auto& a : c.attributes) {
      if (std::find(attrs.begin(), attrs.end(), a) == attrs.end()) attrs.push_back(std::move(a));
    }
    c.attributes = std::move(attrs);
    const auto [it, inserted] = first_index.emplace(c.id, i);
    if (!inserted) {
      auto is = issue(ErrorKind::DuplicateConceptId,
                      "concept id '" + c.id + "' used by both '" + concepts[it->second].name + "' and '" +
                          c.name + "'");
      is.concept_index = i;
      issues.push_back(std::move(is));
    }
  }

  // Edges.
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> seen_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    auto edge_issue = [&](ErrorKind kind, std::string message) {
      auto is = issue(kind, std::move(message));
      is.edge_index = i;
      return is;
    };
    if (!relation_known(e.relation)) {
      issues.push_back(edge_issue(ErrorKind::UnknownRelation,
                                  "unknown relation '" + e.relation + "' in edge " + describe(e)));
      continue;
    }
    if (e.source == e.target) {
      issues.push_back(edge_issue(ErrorKind::SelfLoop, "self-loop " + describe(e)));
      continue;
    }
    bool dangling = false;
    for (const auto* endpoint : {&e.source, &e.target}) {
      if (!first_index.contains(*endpoint)) {
        issues.push_back(edge_issue(ErrorKind::DanglingEdgeEndpoint,
                                    "edge " + describe(e) + " refers to unknown concept '" + *endpoint + "'"));
        dangling = true;
        break;
      }
    }
    if (dangling) continue;
    const auto [it, inserted] = seen_edges.emplace(std::make_tuple(e.source, e.relation, e.target), i);
    if (!inserted) {
      auto is = edge_issue(ErrorKind::DuplicateEdge, "duplicate edge " + describe(e));
      is.other_edge_index = it->second;
      issues.push_back(std::move(is));
    }
  }

  // Glossary.
  for (auto& [key, def] : glossary) {
    if (!first_index.contains(key)) {
      issues.push_back(issue(ErrorKind::UnknownGlossaryConcept,
                             "glossary entry for unknown concept '" + key + "'"));
      continue;
    }
    if (def.concept_id.empty()) def.concept_id = key;
    if (def.concept_id != key) {
      issues.push_back(issue(ErrorKind::InvalidDefinition,
                             "glossary key '" + key + "' holds definition of '" + def.concept_id + "'"));
      continue;
    }
    std::set<std::string> refs;
    for (const auto& r : def.referenced) {
      if (r == key) {
        issues.push_back(issue(ErrorKind::InvalidDefinition, "definition of '" + key + "' references itself"));
      } else if (!first_index.contains(r)) {
        issues.push_back(issue(ErrorKind::InvalidDefinition,
                               "definition of '" + key + "' references unknown concept '" + r + "'"));
      } else if (!refs.insert(r).second) {
        issues.push_back(issue(ErrorKind::InvalidDefinition,
                               "definition of '" + key + "' references '" + r + "' twice"));
      }
    }
  }

  if (!issues.empty()) throw Error(std::move(issues));

  Ontology o;
  o.name_ = std::move(name);
  std::sort(concepts.begin(), concepts.end(), [](const Concept& a, const Concept& b) { return a.id < b.id; });
  for (auto& c : concepts) {
    c.defined = glossary.contains(c.id);
  }
  for (auto& [key, def] : glossary) {
    const auto& c = concepts[static_cast<std::size_t>(
        std::lower_bound(concepts.begin(), concepts.end(), key,
                         [](const Concept& x, const std::string& k) { return x.id < k; }) -
        concepts.begin())];
    def.attributes = c.attributes;
  }
  o.concepts_ = std::move(concepts);
  for (std::size_t i = 0; i < o.concepts_.size(); ++i) o.index_.emplace(o.concepts_[i].id, i);
  std::sort(edges.begin(), edges.end(), edge_less);
  o.edges_ = std::move(edges);
  o.relations_ = std::move(relations);
  o.glossary_ = std::move(glossary);

  const std::size_t n = o.concepts_.size();
  o.parents_.assign(n, {});
  o.children_.assign(n, {});
  for (const auto& e : o.edges_) {
    if (!o.is_hierarchical(e)) continue;
    const std::size_t s = o.index_.at(e.source);
    const std::size_t t = o.index_.at(e.target);
    o.parents_[s].push_back(t);
    o.children_[t].push_back(s);
  }
  for (auto* adj : {&o.parents_, &o.children_}) {
    for (auto& list : *adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  // Kahn elimination from the roots downwards.
  std::vector<std::size_t> remaining(n);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    remaining[v] = o.parents_[v].size();
    if (remaining[v] == 0) queue.push_back(v);
  }
  std::size_t removed = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    ++removed;
    for (std::size_t c : o.children_[v]) {
      if (--remaining[c] == 0) queue.push_back(c);
    }
  }
  if (removed != n) {
    std::vector<bool> pending(n);
    for (std::size_t v = 0; v < n; ++v) pending[v] = remaining[v] != 0;
    const auto cycle = find_cycle(o.parents_, pending);
    std::string path;
    for (std::size_t v : cycle) {
      if (!path.empty()) path += " -> ";
      path += o.concepts_[v].id;
    }
    auto is = issue(ErrorKind::HierarchicalCycle, "hierarchical cycle: " + path);
    for (std::size_t v : cycle) is.subjects.push_back(o.concepts_[v].id);
    throw Error(std::move(is));
  }
  return o;
}

Ontology revalidate(const Ontology& o) {
  return build_ontology(o.name(), o.concepts(), o.edges(), o.glossary(), o.user_relations());
}

std::vector<std::string> roots(const Ontology& o) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < o.concepts().size(); ++i) {
    if (o.parents()[i].empty()) out.push_back(o.concepts()[i].id);
  }
  return out;
}

std::vector<std::string> leaves(const Ontology& o) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < o.concepts().size(); ++i) {
    if (o.children()[i].empty()) out.push_back(o.concepts()[i].id);
  }
  return out;
}

}  // namespace ontoforge
