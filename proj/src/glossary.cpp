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

#include "ontoforge/glossary.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ontoforge/text.hpp"

namespace ontoforge::glossary {

TermTable known_terms(const Ontology& o) {
  TermTable out;
  for (const auto& c : o.concepts()) out.emplace(c.name, c.id);
  return out;
}

std::vector<TermMatch> scan_terms(std::string_view text, const TermTable& terms) {
  struct Candidate {
    std::u32string folded;
    const std::string* id;
  };
  std::vector<Candidate> candidates;
  for (const auto& [name, id] : terms) {
    auto folded = text::fold(text::decode(text::trim(name)));
    if (!folded.empty()) candidates.push_back({std::move(folded), &id});
  }
  // Longest first; equal lengths by id so the result does not depend on
  // table order.
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.folded.size() != b.folded.size()) return a.folded.size() > b.folded.size();
    return *a.id < *b.id;
  });

  const std::u32string original = text::decode(text);
  const std::u32string folded = text::fold(original);
  const std::size_t n = folded.size();
  std::vector<TermMatch> out;

  std::size_t i = 0;
  while (i < n) {
    const bool at_boundary = i == 0 || !text::is_word_char(folded[i - 1]);
    if (!at_boundary || !text::is_word_char(folded[i])) {
      ++i;
      continue;
    }
    const Candidate* hit = nullptr;
    for (const auto& cand : candidates) {
      const std::size_t len = cand.folded.size();
      if (i + len > n) continue;
      if (folded.compare(i, len, cand.folded) != 0) continue;
      if (i + len < n && text::is_word_char(folded[i + len]) && text::is_word_char(cand.folded.back())) {
        continue;
      }
      hit = &cand;
      break;
    }
    if (hit == nullptr) {
      ++i;
      continue;
    }
    const std::size_t len = hit->folded.size();
    out.push_back(TermMatch{*hit->id, i, i + len, text::encode(std::u32string_view(original).substr(i, len))});
    i += len;
  }
  return out;
}

std::vector<std::string> extract_references(std::string_view def_text, const TermTable& terms,
                                            std::string_view self_id) {
  std::vector<std::string> out;
  for (auto& m : scan_terms(def_text, terms)) {
    if (m.id == self_id) continue;
    if (std::find(out.begin(), out.end(), m.id) == out.end()) out.push_back(std::move(m.id));
  }
  return out;
}

std::vector<Suggestion> suggest_edges(const Ontology& o) {
  std::set<std::pair<std::string, std::string>> connected;
  for (const auto& e : o.edges()) {
    connected.emplace(e.source, e.target);
    connected.emplace(e.target, e.source);
  }
  const TermTable terms = known_terms(o);
  std::vector<Suggestion> out;
  for (const auto& [id, def] : o.glossary()) {
    const auto matches = scan_terms(def.text, terms);
    for (const auto& ref : def.referenced) {
      if (ref == id || connected.contains({id, ref})) continue;
      Suggestion s{id, ref, "genus_species", {}, 0, 0};
      const auto m = std::find_if(matches.begin(), matches.end(), [&](const TermMatch& x) { return x.id == ref; });
      if (m != matches.end()) {
        s.evidence = m->text;
        s.begin = m->begin;
        s.end = m->end;
      }
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return out;
}

std::string_view to_string(Coverage c) {
  switch (c) {
    case Coverage::defined: return "defined";
    case Coverage::manual: return "manual";
    case Coverage::undefined: return "undefined";
  }
  return "undefined";
}

std::vector<std::pair<std::string, Coverage>> coverage_report(const Ontology& o) {
  std::vector<std::pair<std::string, Coverage>> out;
  out.reserve(o.concepts().size());
  for (const auto& c : o.concepts()) {
    const auto it = o.glossary().find(c.id);
    Coverage status = Coverage::undefined;
    if (it != o.glossary().end()) status = it->second.manual ? Coverage::manual : Coverage::defined;
    out.emplace_back(c.id, status);
  }
  return out;
}

}  // namespace ontoforge::glossary
