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

#include "ontoforge/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ontoforge/dsl.hpp"
#include "ontoforge/export.hpp"
#include "ontoforge/glossary.hpp"
#include "ontoforge/hierarchy.hpp"
#include "ontoforge/lint.hpp"
#include "ontoforge/merge.hpp"
#include "ontoforge/text.hpp"

#ifndef ONTOFORGE_VERSION
#define ONTOFORGE_VERSION "0.0.0"
#endif

namespace ontoforge::cli {

namespace {

using nlohmann::json;

// Raised inside a command to stop with an exit code; messages have already
// been written.
struct Exit {
  int code;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

bool is_json_path(const std::string& path) { return path.size() >= 5 && path.ends_with(".json"); }

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, bool quiet) : out_(out), err_(err), quiet_(quiet) {}

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }
  bool quiet() const { return quiet_; }

  std::string read(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
      err_ << path << ": error: cannot read file\n";
      throw Exit{kUsageError};
    }
    text::strip_bom(*text);
    return *text;
  }

  void report(const std::string& path, const Error& e) {
    for (const auto& issue : e.issues()) err_ << path << ":" << format_issue(issue) << "\n";
  }

  dsl::SourceDocument parse(const std::string& path) {
    const auto text = read(path);
    try {
      return dsl::parse(text);
    } catch (const Error& e) {
      report(path, e);
      throw Exit{kValidationError};
    }
  }

  Ontology load(const std::string& path) {
    if (is_json_path(path)) {
      const auto text = read(path);
      try {
        std::vector<std::string> notes;
        auto o = exporter::import_json(text, &notes);
        if (!quiet_) {
          for (const auto& n : notes) err_ << path << ": info: " << n << "\n";
        }
        return o;
      } catch (const Error& e) {
        report(path, e);
        throw Exit{kValidationError};
      }
    }
    const auto doc = parse(path);
    try {
      return dsl::lower(doc);
    } catch (const Error& e) {
      report(path, e);
      throw Exit{kValidationError};
    }
  }

  void write(const std::string& dest, const std::string& content) {
    if (dest.empty() || dest == "-") {
      out_ << content;
      return;
    }
    std::ofstream f(dest, std::ios::binary | std::ios::trunc);
    if (!f || !(f << content) || !f.flush()) {
      err_ << dest << ": error: cannot write file\n";
      throw Exit{kUsageError};
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool quiet_;
};

int cmd_check(Session& s, const std::string& path, const std::string& format) {
  const Ontology o = s.load(path);
  if (format == "json") {
    s.out() << json{{"ok", true}, {"concepts", o.concepts().size()}, {"edges", o.edges().size()}}.dump(2) << "\n";
  } else if (!s.quiet()) {
    s.out() << o.concepts().size() << " concepts, " << o.edges().size() << " edges\n";
  }
  return kOk;
}

int cmd_rank(Session& s, const std::string& path, const std::string& format) {
  const auto ranking = hierarchy::rank(s.load(path));
  if (format == "json") {
    json levels = json::array();
    for (const auto& [level, ids] : ranking.by_level) levels.push_back({{"level", level}, {"concepts", ids}});
    s.out() << json{{"max_level", ranking.max_level()}, {"levels", levels}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [level, ids] : ranking.by_level) {
    for (const auto& id : ids) s.out() << level << "\t" << id << "\n";
  }
  return kOk;
}

int cmd_lint(Session& s, const std::string& path, const std::string& config_path, const std::string& deny,
             const std::string& format) {
  lint::LintConfig config;
  if (!config_path.empty()) {
    const auto text = read_file(config_path);
    if (!text) {
      s.err() << config_path << ": error: cannot read config\n";
      return kUsageError;
    }
    try {
      config = lint::parse_config(*text);
    } catch (const Error& e) {
      s.report(config_path, e);
      return kUsageError;
    }
  }
  std::vector<lint::Diagnostic> diags;
  if (is_json_path(path)) {
    diags = lint::lint(s.load(path), config);
  } else {
    const auto doc = s.parse(path);
    try {
      diags = lint::lint_document(doc, config);
    } catch (const Error& e) {
      s.report(path, e);
      return kValidationError;
    }
  }
  s.out() << (format == "json" ? lint::render_json(diags) : lint::render_text(diags));
  if (!deny.empty() && lint::any_at_or_above(diags, *lint::parse_severity(deny))) return kLintDenied;
  return kOk;
}

int cmd_suggest(Session& s, const std::string& path, const std::string& format) {
  const auto suggestions = glossary::suggest_edges(s.load(path));
  if (format == "json") {
    json arr = json::array();
    for (const auto& sg : suggestions) {
      arr.push_back({{"source", sg.source},
                     {"relation", sg.relation},
                     {"target", sg.target},
                     {"evidence", sg.evidence},
                     {"begin", sg.begin},
                     {"end", sg.end}});
    }
    s.out() << arr.dump(2) << "\n";
    return kOk;
  }
  for (const auto& sg : suggestions) {
    s.out() << sg.source << "\t" << sg.relation << "\t" << sg.target << "\t" << sg.evidence << "\n";
  }
  return kOk;
}

int cmd_coverage(Session& s, const std::string& path, const std::string& format) {
  const auto rows = glossary::coverage_report(s.load(path));
  if (format == "json") {
    json arr = json::array();
    for (const auto& [id, status] : rows) arr.push_back({{"concept_id", id}, {"status", glossary::to_string(status)}});
    s.out() << arr.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [id, status] : rows) s.out() << id << "\t" << glossary::to_string(status) << "\n";
  return kOk;
}

int cmd_merge(Session& s, const std::string& a, const std::string& b, const std::string& policy_name,
              const std::string& dest) {
  const auto policy = merge::parse_policy(policy_name);
  const Ontology left = s.load(a);
  const Ontology right = s.load(b);
  try {
    auto result = merge::merge(left, right, *policy);
    s.write(dest, dsl::serialize(dsl::to_document(result.ontology)));
    if (!s.quiet()) s.err() << merge::report_json(result.report);
    return kOk;
  } catch (const Error& e) {
    s.report(a + "+" + b, e);
    return kValidationError;
  }
}

int cmd_export(Session& s, const std::string& path, const std::string& format, const std::string& dest,
               const std::string& base_iri, bool levels) {
  const Ontology o = s.load(path);
  exporter::ExportOptions options;
  options.format = *exporter::parse_format(format);
  options.base_iri = base_iri;
  options.include_levels = levels;
  std::string content;
  try {
    content = exporter::export_as(o, options);
  } catch (const Error& e) {
    s.report(path, e);
    return kUsageError;
  }
  s.write(dest, content);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, check and export domain ontologies", "ontoforge"};
  app.set_version_flag("--version", ONTOFORGE_VERSION);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress summaries and reports");
  app.require_subcommand(1);

  std::string path, path_b, format, config, deny, policy = "strict", dest, base_iri;
  bool levels = false;

  auto* check = app.add_subcommand("check", "Parse and validate an ontology");
  check->add_option("path", path, "Ontology file (.onto or .json)")->required();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* rank = app.add_subcommand("rank", "Print the above-below level of every concept");
  rank->add_option("path", path)->required();
  rank->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* lint_cmd = app.add_subcommand("lint", "Check design heuristics");
  lint_cmd->add_option("path", path)->required();
  lint_cmd->add_option("--config", config, "key = value lint configuration");
  lint_cmd->add_option("--deny", deny, "Exit 2 on diagnostics at or above this severity")
      ->check(CLI::IsMember({"info", "warning", "error"}));
  lint_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* suggest = app.add_subcommand("suggest", "Suggest edges from glossary definitions");
  suggest->add_option("path", path)->required();
  suggest->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* coverage = app.add_subcommand("coverage", "Glossary coverage per concept");
  coverage->add_option("path", path)->required();
  coverage->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* merge_cmd = app.add_subcommand("merge", "Join two fragments through shared category concepts");
  merge_cmd->add_option("a", path)->required();
  merge_cmd->add_option("b", path_b)->required();
  merge_cmd->add_option("--policy", policy, "strict, prefer_left or prefer_right")
      ->check(CLI::IsMember({"strict", "prefer_left", "prefer_right"}));
  merge_cmd->add_option("-o,--output", dest, "Merged .onto file (default: standard output)");

  auto* export_cmd = app.add_subcommand("export", "Write Turtle, DOT or JSON");
  export_cmd->add_option("path", path)->required();
  export_cmd->add_option("--format", format, "turtle, dot or json")
      ->required()
      ->check(CLI::IsMember({"turtle", "ttl", "dot", "json"}));
  export_cmd->add_option("-o,--output", dest, "Output file (default: standard output)");
  export_cmd->add_option("--base-iri", base_iri, "Namespace for concept IRIs (Turtle)");
  export_cmd->add_flag("--levels", levels, "Annotate DOT nodes with their level");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Session session(out, err, quiet);
  try {
    if (*check) return cmd_check(session, path, format);
    if (*rank) return cmd_rank(session, path, format);
    if (*lint_cmd) return cmd_lint(session, path, config, deny, format);
    if (*suggest) return cmd_suggest(session, path, format);
    if (*coverage) return cmd_coverage(session, path, format);
    if (*merge_cmd) return cmd_merge(session, path, path_b, policy, dest);
    if (*export_cmd) return cmd_export(session, path, format, dest, base_iri, levels);
  } catch (const Exit& e) {
    return e.code;
  }
  return kUsageError;
}

}  // namespace ontoforge::cli
