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

#ifndef ONTOFORGE_ERROR_HPP_
#define ONTOFORGE_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge {

enum class ErrorKind {
  // ontology validation
  EmptyConceptSet,
  EmptyConceptName,
  InvalidConceptId,
  DuplicateConceptId,
  DanglingEdgeEndpoint,
  SelfLoop,
  DuplicateEdge,
  UnknownRelation,
  InvalidRelation,
  DuplicateRelation,
  UnknownGlossaryConcept,
  InvalidDefinition,
  HierarchicalCycle,
  // source format
  SyntaxError,
  DuplicateBlock,
  UnknownDirective,
  UnresolvedConceptName,
  // operations
  UnknownConcept,
  MergeConflict,
  TargetNotCategory,
  InvalidBaseIri,
  SchemaError,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

// 1-based line and column; columns count code points.
struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct Issue {
  ErrorKind kind;
  std::string message;
  std::optional<SourceSpan> span;
  // Indices into the builder inputs the issue is about; lets front ends map
  // issues back onto their own source positions.
  std::optional<std::size_t> concept_index;
  std::optional<std::size_t> edge_index;
  std::optional<std::size_t> other_edge_index;
  // Concept ids the issue names, e.g. the cycle path for HierarchicalCycle.
  std::vector<std::string> subjects;
};

std::string format_issue(const Issue& issue);

// Every failure surfaced by the library. Carries one or more issues; the
// primary kind is that of the first issue.
class Error : public std::runtime_error {
 public:
  explicit Error(Issue issue);
  explicit Error(std::vector<Issue> issues);
  Error(ErrorKind kind, std::string message);

  ErrorKind kind() const { return issues_.front().kind; }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace ontoforge

#endif  // ONTOFORGE_ERROR_HPP_
