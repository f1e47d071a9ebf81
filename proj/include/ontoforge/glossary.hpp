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

#ifndef ONTOFORGE_GLOSSARY_HPP_
#define ONTOFORGE_GLOSSARY_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoforge/model.hpp"

namespace ontoforge::glossary {

// Term name -> concept id.
using TermTable = std::map<std::string, std::string>;

TermTable known_terms(const Ontology& o);

// One accepted occurrence of a known term. Offsets count code points.
struct TermMatch {
  std::string id;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;  // the matched slice of the original text
};

// Leftmost, longest-first scan over case-folded text. A match must start
// and end on word boundaries; once a term is accepted the scan resumes after
// it, so shorter terms nested inside it are never reported.
std::vector<TermMatch> scan_terms(std::string_view text, const TermTable& terms);

// Ids of concepts mentioned in a definition: duplicate-free, first
// occurrence order, never `self_id`.
std::vector<std::string> extract_references(std::string_view def_text, const TermTable& terms,
                                            std::string_view self_id);

struct Suggestion {
  std::string source;    // the defined concept
  std::string target;    // the referenced concept
  std::string relation;  // always genus_species for now
  std::string evidence;  // matched text inside the definition, may be empty
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Suggestion&) const = default;
};

// Advisory edges from definitions to the concepts they reference, skipping
// pairs already joined by an edge in either direction. Sorted by
// (source, target).
std::vector<Suggestion> suggest_edges(const Ontology& o);

enum class Coverage { defined, manual, undefined };

std::string_view to_string(Coverage c);

// One row per concept, sorted by id.
std::vector<std::pair<std::string, Coverage>> coverage_report(const Ontology& o);

}  // namespace ontoforge::glossary

#endif  // ONTOFORGE_GLOSSARY_HPP_
