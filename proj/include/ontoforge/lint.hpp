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

#ifndef ONTOFORGE_LINT_HPP_
#define ONTOFORGE_LINT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/dsl.hpp"
#include "ontoforge/model.hpp"

namespace ontoforge::lint {

// Rule catalog. Codes are stable.
//   L1 warning  concept with exactly one direct subclass
//   L2 warning  concept with more direct subclasses than fanout_max
//   L3 warning  direct subclasses of one concept on different levels
//   L4 error    empty concept set (document linting only)
//   L5 warning  concept without a glossary definition
//   L6 info     concept not connected to any category concept
//   L7 warning  plural name or abbreviation in a name
//   L8 info     more concepts than concept_budget
enum class Severity { info, warning, error };

std::string_view to_string(Severity s);
std::optional<Severity> parse_severity(std::string_view s);

struct RuleInfo {
  std::string_view code;
  Severity severity;
  std::string_view summary;
};

const std::vector<RuleInfo>& rule_catalog();

struct Diagnostic {
  std::string rule;
  Severity severity;
  std::string subject;
  std::string message;
  std::optional<std::string> suggestion;

  bool operator==(const Diagnostic&) const = default;
};

struct PluralRule {
  std::vector<std::string> suffixes;
  std::vector<std::string> exceptions;  // endings that look plural but are not
};

struct LintConfig {
  static constexpr int kFanoutCeiling = 12;

  int fanout_max = 7;
  std::optional<int> concept_budget;
  // ECMAScript regex searched in each name; when unset, a word holding two
  // or more consecutive uppercase letters counts as an abbreviation.
  std::optional<std::string> abbreviation_regex;
  // Keyed by script: "ru" for words with Cyrillic letters, "en" otherwise.
  std::map<std::string, PluralRule> plural_rules = default_plural_rules();
  // Missing entries are on.
  std::map<std::string, bool> rules;

  int effective_fanout() const;
  bool enabled(std::string_view rule) const;

  static std::map<std::string, PluralRule> default_plural_rules();
};

// `key = value` lines; lines starting with '#' are comments. Keys: fanout_max, concept_budget,
// abbreviation_regex, plural_suffixes.<script>, plural_exceptions.<script>,
// rule.<code> (on/off). Throws InvalidConfig.
LintConfig parse_config(std::string_view text);

// Sorted by (rule, subject, message).
std::vector<Diagnostic> lint(const Ontology& o, const LintConfig& config = {});

// Like lint(), but reports an empty document as L4 instead of failing to
// build it.
std::vector<Diagnostic> lint_document(const dsl::SourceDocument& doc, const LintConfig& config = {});

bool any_at_or_above(const std::vector<Diagnostic>& diags, Severity level);

// One line per diagnostic: `RULE SEVERITY subject message`.
std::string render_text(const std::vector<Diagnostic>& diags);
std::string render_json(const std::vector<Diagnostic>& diags);

}  // namespace ontoforge::lint

#endif  // ONTOFORGE_LINT_HPP_
