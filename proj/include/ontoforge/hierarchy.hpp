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

#ifndef ONTOFORGE_HIERARCHY_HPP_
#define ONTOFORGE_HIERARCHY_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/model.hpp"

namespace ontoforge::hierarchy {

// "Above-below" stratification: level 1 holds the most general concepts.
struct Ranking {
  std::map<std::string, int> levels;
  // (level, ids sorted) in ascending level order.
  std::vector<std::pair<int, std::vector<std::string>>> by_level;

  int max_level() const { return by_level.empty() ? 0 : by_level.back().first; }
  bool operator==(const Ranking&) const = default;
};

// level(c) = 1 + length of the longest hierarchical path from c up to a
// root. Isolated concepts sit on level 1.
Ranking rank(const Ontology& o);

// Per-index levels, same rule as rank().
std::vector<int> level_vector(const Ontology& o);

// Sources of hierarchical edges into `id`, sorted. Throws UnknownConcept.
std::vector<std::string> direct_subclasses(const Ontology& o, std::string_view id);

// Own attributes followed by those inherited along partial-order edges
// (transitively), nearest ancestors first: descending ancestor level, ties
// by id. Whole-part and other non-partial-order edges do not pass
// attributes. Throws UnknownConcept.
std::vector<std::string> effective_attributes(const Ontology& o, std::string_view id);

// Concepts with two or more distinct partial-order parents, sorted by id.
std::vector<std::pair<std::string, std::vector<std::string>>> multi_parents(const Ontology& o);

}  // namespace ontoforge::hierarchy

#endif  // ONTOFORGE_HIERARCHY_HPP_
