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

#include "ontoforge/error.hpp"

#include <utility>

namespace ontoforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyConceptSet: return "EmptyConceptSet";
    case ErrorKind::EmptyConceptName: return "EmptyConceptName";
    case ErrorKind::InvalidConceptId: return "InvalidConceptId";
    case ErrorKind::DuplicateConceptId: return "DuplicateConceptId";
    case ErrorKind::DanglingEdgeEndpoint: return "DanglingEdgeEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::UnknownRelation: return "UnknownRelation";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::DuplicateRelation: return "DuplicateRelation";
    case ErrorKind::UnknownGlossaryConcept: return "UnknownGlossaryConcept";
    case ErrorKind::InvalidDefinition: return "InvalidDefinition";
    case ErrorKind::HierarchicalCycle: return "HierarchicalCycle";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateBlock: return "DuplicateBlock";
    case ErrorKind::UnknownDirective: return "UnknownDirective";
    case ErrorKind::UnresolvedConceptName: return "UnresolvedConceptName";
    case ErrorKind::UnknownConcept: return "UnknownConcept";
    case ErrorKind::MergeConflict: return "MergeConflict";
    case ErrorKind::TargetNotCategory: return "TargetNotCategory";
    case ErrorKind::InvalidBaseIri: return "InvalidBaseIri";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

std::string format_issue(const Issue& issue) {
  std::string out;
  if (issue.span) {
    out += std::to_string(issue.span->line) + ":" + std::to_string(issue.span->column) + ": ";
  }
  out += "error[";
  out += to_string(issue.kind);
  out += "]: ";
  out += issue.message;
  return out;
}

namespace {

std::string join_messages(const std::vector<Issue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "\n";
    out += format_issue(issue);
  }
  return out;
}

}  // namespace

Error::Error(Issue issue) : Error(std::vector<Issue>{std::move(issue)}) {}

Error::Error(std::vector<Issue> issues)
    : std::runtime_error(join_messages(issues)), issues_(std::move(issues)) {
  if (issues_.empty()) throw std::logic_error("ontoforge::Error without issues");
}

Error::Error(ErrorKind kind, std::string message)
    : Error(Issue{kind, std::move(message), std::nullopt, {}, {}, {}, {}}) {}

}  // namespace ontoforge
