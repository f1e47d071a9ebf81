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

#ifndef ONTOFORGE_MERGE_HPP_
#define ONTOFORGE_MERGE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/model.hpp"

namespace ontoforge::merge {

enum class Policy { strict, prefer_left, prefer_right };

std::string_view to_string(Policy p);
std::optional<Policy> parse_policy(std::string_view s);

enum class ConflictKind { definition_mismatch, kind_mismatch, relation_flag_mismatch };

std::string_view to_string(ConflictKind k);

struct Conflict {
  ConflictKind kind;
  std::string subject;  // concept or relation id present on both sides
  std::string left;
  std::string right;

  bool operator==(const Conflict&) const = default;
};

struct MergeReport {
  std::vector<std::string> joined_on;  // category concepts shared by both sides
  std::vector<Conflict> conflicts;
  std::size_t concept_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::string> notes;
};

std::string report_json(const MergeReport& report);

struct MergeResult {
  Ontology ontology;
  MergeReport report;
};

// Unions concepts by id and edges by triple. Shared concepts whose
// definition or kind disagree, and shared relation types with different
// flags, are conflicts: `strict` throws MergeConflict, the prefer_* policies
// keep one side. Attributes are unioned left side first, and every
// definition's referenced list is recomputed against the merged concept set.
// The result is revalidated, so a union that closes a hierarchical cycle
// throws.
MergeResult merge(const Ontology& left, const Ontology& right, Policy policy = Policy::strict);

// Adds edges whose targets must be category concepts (TargetNotCategory
// otherwise) and revalidates.
Ontology link_to_categories(const Ontology& o, const std::vector<Edge>& category_edges);

}  // namespace ontoforge::merge

#endif  // ONTOFORGE_MERGE_HPP_
