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

#include "ontoforge/lint.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <set>
#include <tuple>

#include "json.hpp"

#include "ontoforge/hierarchy.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::lint {

namespace {

[[noreturn]] void config_error(int line, const std::string& message) {
  throw Error(Issue{ErrorKind::InvalidConfig, message, SourceSpan{line, 1}, {}, {}, {}, {}});
}

bool known_rule(std::string_view code) {
  const auto& cat = rule_catalog();
  return std::any_of(cat.begin(), cat.end(), [&](const RuleInfo& r) { return r.code == code; });
}

Severity severity_of(std::string_view code) {
  for (const auto& r : rule_catalog()) {
    if (r.code == code) return r.severity;
  }
  return Severity::info;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto piece = text::trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(int line, std::string_view key, std::string_view value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    config_error(line, std::string(key) + ": expected an integer, found '" + std::string(value) + "'");
  }
  return out;
}

bool ends_with(const std::u32string& s, const std::u32string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> abbreviations(const std::string& name) {
  std::vector<std::string> out;
  for (const auto& w : text::words(text::decode(name))) {
    int run = 0;
    bool hit = false;
    for (char32_t cp : w) {
      run = text::is_upper(cp) ? run + 1 : 0;
      if (run >= 2) hit = true;
    }
    if (hit) out.push_back(text::encode(w));
  }
  return out;
}

std::optional<std::string> plural_head(const std::string& name,
                                       const std::map<std::string, PluralRule>& rules) {
  const auto ws = text::words(text::decode(name));
  if (ws.empty()) return std::nullopt;
  const std::u32string head = text::fold(ws.front());
  const bool cyrillic = std::any_of(head.begin(), head.end(), text::is_cyrillic);
  const auto it = rules.find(cyrillic ? "ru" : "en");
  if (it == rules.end()) return std::nullopt;
  for (const auto& ex : it->second.exceptions) {
    if (ends_with(head, text::fold(text::decode(ex)))) return std::nullopt;
  }
  for (const auto& suf : it->second.suffixes) {
    const auto folded = text::fold(text::decode(suf));
    if (!folded.empty() && head.size() > folded.size() + 1 && ends_with(head, folded)) {
      return text::encode(ws.front());
    }
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "info";
}

std::optional<Severity> parse_severity(std::string_view s) {
  if (s == "info") return Severity::info;
  if (s == "warning") return Severity::warning;
  if (s == "error") return Severity::error;
  return std::nullopt;
}

const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> kCatalog = {
      {"L1", Severity::warning, "concept has exactly one direct subclass"},
      {"L2", Severity::warning, "concept has too many direct subclasses"},
      {"L3", Severity::warning, "direct subclasses sit on different levels"},
      {"L4", Severity::error, "concept set is empty"},
      {"L5", Severity::warning, "concept has no glossary definition"},
      {"L6", Severity::info, "concept is not connected to a category concept"},
      {"L7", Severity::warning, "name is plural or contains an abbreviation"},
      {"L8", Severity::info, "ontology exceeds its concept budget"},
  };
  return kCatalog;
}

int LintConfig::effective_fanout() const { return std::clamp(fanout_max, 1, kFanoutCeiling); }

bool LintConfig::enabled(std::string_view rule) const {
  const auto it = rules.find(std::string(rule));
  return it == rules.end() || it->second;
}

std::map<std::string, PluralRule> LintConfig::default_plural_rules() {
  return {
      {"ru", {{"ые", "ие", "ы", "и"}, {"ние", "тие", "ствие"}}},
      {"en", {{"s"}, {"ss", "us", "is", "ics"}}},
  };
}

LintConfig parse_config(std::string_view input) {
  LintConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    const auto nl = input.find('\n', pos);
    std::string_view line = input.substr(pos, nl == std::string_view::npos ? input.npos : nl - pos);
    pos = nl == std::string_view::npos ? input.size() + 1 : nl + 1;
    ++line_no;
    line = text::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) config_error(line_no, "expected 'key = value'");
    const std::string key(text::trim(line.substr(0, eq)));
    const std::string value(text::trim(line.substr(eq + 1)));

    if (key == "fanout_max") {
      cfg.fanout_max = parse_int(line_no, key, value);
      if (cfg.fanout_max < 1) config_error(line_no, "fanout_max must be at least 1");
    } else if (key == "concept_budget") {
      if (value == "off" || value.empty()) {
        cfg.concept_budget.reset();
      } else {
        cfg.concept_budget = parse_int(line_no, key, value);
        if (*cfg.concept_budget < 1) config_error(line_no, "concept_budget must be at least 1");
      }
    } else if (key == "abbreviation_regex") {
      try {
        std::regex check(value, std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        config_error(line_no, "abbreviation_regex: " + std::string(e.what()));
      }
      cfg.abbreviation_regex = value;
    } else if (key.starts_with("plural_suffixes.")) {
      cfg.plural_rules[key.substr(16)].suffixes = split_list(value);
    } else if (key.starts_with("plural_exceptions.")) {
      cfg.plural_rules[key.substr(18)].exceptions = split_list(value);
    } else if (key.starts_with("rule.")) {
      const std::string code = key.substr(5);
      if (!known_rule(code)) config_error(line_no, "unknown rule code '" + code + "'");
      if (value == "on") {
        cfg.rules[code] = true;
      } else if (value == "off") {
        cfg.rules[code] = false;
      } else {
        config_error(line_no, key + ": expected 'on' or 'off', found '" + value + "'");
      }
    } else {
      config_error(line_no, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::vector<Diagnostic> lint(const Ontology& o, const LintConfig& config) {
  std::vector<Diagnostic> out;
  auto emit = [&](std::string_view rule, std::string subject, std::string message,
                  std::optional<std::string> suggestion = std::nullopt) {
    if (!config.enabled(rule)) return;
    out.push_back({std::string(rule), severity_of(rule), std::move(subject), std::move(message),
                   std::move(suggestion)});
  };

  const auto& concepts = o.concepts();
  const auto levels = hierarchy::level_vector(o);
  const int fanout = config.effective_fanout();

  for (std::size_t i = 0; i < concepts.size(); ++i) {
    const auto& c = concepts[i];
    const auto& kids = o.children()[i];

    if (kids.size() == 1) {
      emit("L1", c.id, "has exactly one direct subclass (" + concepts[kids.front()].id + ")",
           "the hierarchy may be incomplete or the subclass redundant");
    }
    if (static_cast<int>(kids.size()) > fanout) {
      emit("L2", c.id,
           "has " + std::to_string(kids.size()) + " direct subclasses (limit " + std::to_string(fanout) + ")",
           "introduce intermediate classes");
    }
    if (kids.size() >= 2) {
      std::set<int> seen;
      for (std::size_t k : kids) seen.insert(levels[k]);
      if (seen.size() > 1) {
        std::vector<std::string> parts;
        for (std::size_t k : kids) parts.push_back(concepts[k].id + " (L" + std::to_string(levels[k]) + ")");
        emit("L3", c.id, "direct subclasses on different levels: " + join(parts, ", "),
             "place direct subclasses on one level of generalization");
      }
    }
    if (!c.defined) {
      emit("L5", c.id, "no glossary definition", "add a def: entry or mark the concept manual");
    }

    std::vector<std::string> reasons;
    if (config.abbreviation_regex) {
      std::smatch m;
      if (std::regex_search(c.name, m, std::regex(*config.abbreviation_regex))) {
        reasons.push_back("abbreviation '" + m.str() + "'");
      }
    } else {
      for (const auto& a : abbreviations(c.name)) reasons.push_back("abbreviation '" + a + "'");
    }
    if (const auto head = plural_head(c.name, config.plural_rules)) {
      reasons.push_back("plural word '" + *head + "'");
    }
    if (!reasons.empty()) {
      emit("L7", c.id, "name '" + c.name + "' has " + join(reasons, ", "),
           "use singular names without abbreviations");
    }
  }

  // L6: walk down from every category concept.
  std::vector<bool> reached(concepts.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (concepts[i].is_category) {
      reached[i] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t k : o.children()[v]) {
      if (!reached[k]) {
        reached[k] = true;
        stack.push_back(k);
      }
    }
  }
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (!reached[i]) {
      emit("L6", concepts[i].id, "not connected to any category concept through hierarchical edges",
           "link the fragment to a category-level concept");
    }
  }

  if (config.concept_budget && static_cast<int>(concepts.size()) > *config.concept_budget) {
    emit("L8", o.name(),
         std::to_string(concepts.size()) + " concepts exceed the budget of " + std::to_string(*config.concept_budget));
  }

  std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.rule, a.subject, a.message) < std::tie(b.rule, b.subject, b.message);
  });
  return out;
}

std::vector<Diagnostic> lint_document(const dsl::SourceDocument& doc, const LintConfig& config) {
  if (doc.concepts.empty()) {
    if (!config.enabled("L4")) return {};
    return {{"L4", Severity::error, doc.ontology_name, "concept set is empty", "add at least one concept"}};
  }
  return lint(dsl::lower(doc), config);
}

bool any_at_or_above(const std::vector<Diagnostic>& diags, Severity level) {
  return std::any_of(diags.begin(), diags.end(),
                     [&](const Diagnostic& d) { return static_cast<int>(d.severity) >= static_cast<int>(level); });
}

std::string render_text(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += d.rule + " " + std::string(to_string(d.severity)) + " " + d.subject + " " + d.message + "\n";
  }
  return out;
}

std::string render_json(const std::vector<Diagnostic>& diags) {
  auto arr = nlohmann::json::array();
  for (const auto& d : diags) {
    nlohmann::json j = {{"rule", d.rule},
                        {"severity", std::string(to_string(d.severity))},
                        {"subject", d.subject},
                        {"message", d.message}};
    if (d.suggestion) j["suggestion"] = *d.suggestion;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace ontoforge::lint
