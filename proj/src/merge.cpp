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

#include "ontoforge/merge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "json.hpp"

#include "ontoforge/glossary.hpp"

namespace ontoforge::merge {

namespace {

std::string kind_summary(const Concept& c) {
  return describe(c.kind) + (c.is_category ? " category" : "");
}

std::string definition_summary(const Definition& d) {
  return (d.manual ? "manual: " : "") + d.text;
}

std::string relation_summary(const RelationType& r) {
  std::string out = "\"" + r.label + "\"";
  if (r.is_partial_order) out += " partial_order";
  if (r.is_hierarchical) out += " hierarchical";
  return out;
}

}  // namespace

std::string_view to_string(Policy p) {
  switch (p) {
    case Policy::strict: return "strict";
    case Policy::prefer_left: return "prefer_left";
    case Policy::prefer_right: return "prefer_right";
  }
  return "strict";
}

std::optional<Policy> parse_policy(std::string_view s) {
  if (s == "strict") return Policy::strict;
  if (s == "prefer_left") return Policy::prefer_left;
  if (s == "prefer_right") return Policy::prefer_right;
  return std::nullopt;
}

std::string_view to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::definition_mismatch: return "definition_mismatch";
    case ConflictKind::kind_mismatch: return "kind_mismatch";
    case ConflictKind::relation_flag_mismatch: return "relation_flag_mismatch";
  }
  return "definition_mismatch";
}

std::string report_json(const MergeReport& report) {
  nlohmann::json conflicts = nlohmann::json::array();
  for (const auto& c : report.conflicts) {
    conflicts.push_back({{"kind", std::string(to_string(c.kind))},
                         {"subject", c.subject},
                         {"left", c.left},
                         {"right", c.right}});
  }
  nlohmann::json j = {
      {"joined_on", report.joined_on},
      {"conflicts", conflicts},
      {"result_stats", {{"concepts", report.concept_count}, {"edges", report.edge_count}}},
      {"notes", report.notes},
  };
  return j.dump(2) + "\n";
}

MergeResult merge(const Ontology& left, const Ontology& right, Policy policy) {
  MergeReport report;
  const bool take_right = policy == Policy::prefer_right;

  // Relation types.
  std::map<std::string, RelationType> relations;
  for (const auto& r : left.user_relations()) relations.emplace(r.id, r);
  for (const auto& r : right.user_relations()) {
    const auto [it, inserted] = relations.emplace(r.id, r);
    if (inserted || it->second == r) continue;
    report.conflicts.push_back(
        {ConflictKind::relation_flag_mismatch, r.id, relation_summary(it->second), relation_summary(r)});
    if (take_right) it->second = r;
  }

  // Concepts.
  std::map<std::string, Concept> concepts;
  for (const auto& c : left.concepts()) concepts.emplace(c.id, c);
  for (const auto& rc : right.concepts()) {
    const auto [it, inserted] = concepts.emplace(rc.id, rc);
    if (inserted) continue;
    Concept& lc = it->second;
    if (lc.is_category && rc.is_category) report.joined_on.push_back(rc.id);
    if (lc.kind != rc.kind || lc.is_category != rc.is_category) {
      report.conflicts.push_back({ConflictKind::kind_mismatch, rc.id, kind_summary(lc), kind_summary(rc)});
      if (take_right) {
        lc.kind = rc.kind;
        lc.is_category = rc.is_category;
      }
    }
    if (lc.name != rc.name) {
      report.notes.push_back("concept '" + rc.id + "' is named '" + lc.name + "' on the left and '" + rc.name +
                             "' on the right; kept '" + (take_right ? rc.name : lc.name) + "'");
      if (take_right) lc.name = rc.name;
    }
    for (const auto& a : rc.attributes) {
      if (std::find(lc.attributes.begin(), lc.attributes.end(), a) == lc.attributes.end()) {
        lc.attributes.push_back(a);
      }
    }
  }

  // Glossary.
  Glossary glossary = left.glossary();
  for (const auto& [id, rd] : right.glossary()) {
    const auto [it, inserted] = glossary.emplace(id, rd);
    if (inserted) continue;
    const Definition& ld = it->second;
    if (ld.text == rd.text && ld.manual == rd.manual) continue;
    report.conflicts.push_back({ConflictKind::definition_mismatch, id, definition_summary(ld), definition_summary(rd)});
    if (take_right) it->second = rd;
  }

  std::sort(report.conflicts.begin(), report.conflicts.end(), [](const Conflict& a, const Conflict& b) {
    return std::make_pair(a.subject, static_cast<int>(a.kind)) < std::make_pair(b.subject, static_cast<int>(b.kind));
  });

  if (policy == Policy::strict && !report.conflicts.empty()) {
    std::vector<Issue> issues;
    for (const auto& c : report.conflicts) {
      issues.push_back(Issue{ErrorKind::MergeConflict,
                             std::string(to_string(c.kind)) + " on '" + c.subject + "': left " + c.left +
                                 " | right " + c.right,
                             std::nullopt, {}, {}, {}, {c.subject}});
    }
    throw Error(std::move(issues));
  }

  // Edges.
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::vector<Edge> edges;
  for (const auto* side : {&left, &right}) {
    for (const auto& e : side->edges()) {
      if (seen.emplace(e.source, e.relation, e.target).second) edges.push_back(e);
    }
  }

  // Referenced concepts depend on the set of known terms, which has grown.
  ontoforge::glossary::TermTable terms;
  for (const auto& [id, c] : concepts) terms.emplace(c.name, id);
  for (auto& [id, def] : glossary) def.referenced = ontoforge::glossary::extract_references(def.text, terms, id);

  std::vector<Concept> concept_list;
  for (auto& [id, c] : concepts) concept_list.push_back(std::move(c));
  std::vector<RelationType> relation_list;
  for (auto& [id, r] : relations) relation_list.push_back(std::move(r));

  Ontology merged = build_ontology(left.name(), std::move(concept_list), std::move(edges), std::move(glossary),
                                   std::move(relation_list));

  if (report.joined_on.empty()) {
    report.notes.push_back("no shared category concepts; result is a disjoint union");
  }
  report.concept_count = merged.concepts().size();
  report.edge_count = merged.edges().size();
  return MergeResult{std::move(merged), std::move(report)};
}

Ontology link_to_categories(const Ontology& o, const std::vector<Edge>& category_edges) {
  std::vector<Issue> issues;
  for (std::size_t i = 0; i < category_edges.size(); ++i) {
    const auto& e = category_edges[i];
    const Concept* target = o.find(e.target);
    if (target != nullptr && !target->is_category) {
      issues.push_back(Issue{ErrorKind::TargetNotCategory,
                             "edge " + describe(e) + " targets '" + e.target + "', which is not a category concept",
                             std::nullopt, {}, i, {}, {e.target}});
    }
  }
  if (!issues.empty()) throw Error(std::move(issues));
  if (category_edges.empty()) return o;

  std::vector<Edge> edges = o.edges();
  edges.insert(edges.end(), category_edges.begin(), category_edges.end());
  return build_ontology(o.name(), o.concepts(), std::move(edges), o.glossary(), o.user_relations());
}

}  // namespace ontoforge::merge
