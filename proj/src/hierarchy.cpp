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

#include "ontoforge/hierarchy.hpp"

#include <algorithm>
#include <set>

namespace ontoforge::hierarchy {

namespace {

std::size_t require(const Ontology& o, std::string_view id) {
  const auto idx = o.index_of(id);
  if (!idx) throw Error(ErrorKind::UnknownConcept, "unknown concept '" + std::string(id) + "'");
  return *idx;
}

}  // namespace

std::vector<int> level_vector(const Ontology& o) {
  const auto& parents = o.parents();
  const auto& children = o.children();
  const std::size_t n = parents.size();
  std::vector<int> level(n, 1);
  std::vector<std::size_t> pending(n);
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = parents[v].size();
    if (pending[v] == 0) ready.push_back(v);
  }
  // A concept's level is final once every parent has been settled.
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    for (std::size_t c : children[v]) {
      level[c] = std::max(level[c], level[v] + 1);
      if (--pending[c] == 0) ready.push_back(c);
    }
  }
  return level;
}

Ranking rank(const Ontology& o) {
  const auto level = level_vector(o);
  Ranking r;
  std::map<int, std::vector<std::string>> grouped;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const auto& id = o.concepts()[i].id;
    r.levels.emplace(id, level[i]);
    grouped[level[i]].push_back(id);
  }
  for (auto& [lvl, ids] : grouped) {
    std::sort(ids.begin(), ids.end());
    r.by_level.emplace_back(lvl, std::move(ids));
  }
  return r;
}

std::vector<std::string> direct_subclasses(const Ontology& o, std::string_view id) {
  const std::size_t idx = require(o, id);
  std::vector<std::string> out;
  for (std::size_t c : o.children()[idx]) out.push_back(o.concepts()[c].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> effective_attributes(const Ontology& o, std::string_view id) {
  const std::size_t start = require(o, id);
  const std::size_t n = o.concepts().size();

  std::vector<std::vector<std::size_t>> po_parents(n);
  for (const auto& e : o.edges()) {
    if (!o.is_partial_order(e)) continue;
    po_parents[*o.index_of(e.source)].push_back(*o.index_of(e.target));
  }

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  std::vector<std::size_t> ancestors;
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t p : po_parents[v]) {
      if (seen[p]) continue;
      seen[p] = true;
      ancestors.push_back(p);
      stack.push_back(p);
    }
  }

  const auto level = level_vector(o);
  std::sort(ancestors.begin(), ancestors.end(), [&](std::size_t a, std::size_t b) {
    if (level[a] != level[b]) return level[a] > level[b];
    return o.concepts()[a].id < o.concepts()[b].id;
  });

  std::vector<std::string> out;
  auto add = [&](const std::vector<std::string>& attrs) {
    for (const auto& a : attrs) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  };
  add(o.concepts()[start].attributes);
  for (std::size_t a : ancestors) add(o.concepts()[a].attributes);
  return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> multi_parents(const Ontology& o) {
  std::map<std::string, std::set<std::string>> parents;
  for (const auto& e : o.edges()) {
    if (o.is_partial_order(e)) parents[e.source].insert(e.target);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const auto& [id, ps] : parents) {
    if (ps.size() >= 2) out.emplace_back(id, std::vector<std::string>(ps.begin(), ps.end()));
  }
  return out;
}

}  // namespace ontoforge::hierarchy
