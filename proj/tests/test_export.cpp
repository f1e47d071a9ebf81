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

#include <algorithm>
#include <random>
#include <regex>

#include "doctest.h"

#include "generators.hpp"
#include "ontoforge/dsl.hpp"
#include "ontoforge/export.hpp"
#include "ontoforge/hierarchy.hpp"
#include "test_util.hpp"
#include "turtle_checker.hpp"

using namespace ontoforge;

namespace {

constexpr const char* kOwlClass = "<http://www.w3.org/2002/07/owl#Class>";
constexpr const char* kRdfType = "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>";
constexpr const char* kSubClassOf = "<http://www.w3.org/2000/01/rdf-schema#subClassOf>";

std::size_t count_lines_matching(const std::string& text, const std::regex& re) {
  std::size_t n = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    const std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (std::regex_match(line, re)) ++n;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return n;
}

}  // namespace

TEST_SUITE("export") {
  TEST_CASE("subclass axiom for genus_species") {
    const auto o = dsl::load(
        "ontology \"t\"\nconcept \"A\" {}\nconcept \"B\" {}\nedge \"B\" -genus_species-> \"A\"\n");
    const auto ttl = exporter::export_turtle(o);
    const auto parsed = testing::check_turtle(ttl);
    REQUIRE(parsed.ok());
    const testing::Triple axiom{"<urn:onto:t/b>", kSubClassOf, "<urn:onto:t/a>"};
    CHECK(std::find(parsed.triples.begin(), parsed.triples.end(), axiom) != parsed.triples.end());
  }

  TEST_CASE("whole_part becomes partOf, never a subclass axiom") {
    const auto o = dsl::load(
        "ontology \"t\"\nconcept \"A\" {}\nconcept \"B\" {}\nedge \"B\" -whole_part-> \"A\"\n");
    const auto parsed = testing::check_turtle(exporter::export_turtle(o));
    REQUIRE(parsed.ok());
    const testing::Triple part{"<urn:onto:t/b>", "<urn:onto:t/rel/partOf>", "<urn:onto:t/a>"};
    CHECK(std::find(parsed.triples.begin(), parsed.triples.end(), part) != parsed.triples.end());
    for (const auto& t : parsed.triples) CHECK(t.predicate != kSubClassOf);
  }

  TEST_CASE("Cyrillic names use transliterated IRIs and keep their labels") {
    const auto o = dsl::load("ontology \"t\"\nconcept \"Информатика\" {}\n");
    const auto parsed = testing::check_turtle(exporter::export_turtle(o));
    REQUIRE(parsed.ok());
    const testing::Triple label{"<urn:onto:t/informatika>", "<http://www.w3.org/2000/01/rdf-schema#label>",
                                "\"Информатика\"@ru"};
    CHECK(std::find(parsed.triples.begin(), parsed.triples.end(), label) != parsed.triples.end());
  }

  TEST_CASE("fixture turtle: one class per concept, golden file, grammar check") {
    const auto o = dsl::load(testing::fixture_text());
    const auto ttl = exporter::export_turtle(o);
    CHECK(testing::matches_golden("fixture.ttl", ttl));
    const auto parsed = testing::check_turtle(ttl);
    for (const auto& e : parsed.errors) MESSAGE(e);
    REQUIRE(parsed.ok());
    std::size_t classes = 0, subclass = 0;
    for (const auto& t : parsed.triples) {
      if (t.predicate == kRdfType && t.object == kOwlClass) ++classes;
      if (t.predicate == kSubClassOf) ++subclass;
    }
    CHECK(classes == o.concepts().size());
    CHECK(subclass == static_cast<std::size_t>(std::count_if(o.edges().begin(), o.edges().end(), [](const Edge& e) {
            return e.relation == "genus_species";
          })));
    // Each object property is declared exactly once.
    std::map<std::string, int> declared;
    for (const auto& t : parsed.triples) {
      if (t.predicate == kRdfType && t.object == "<http://www.w3.org/2002/07/owl#ObjectProperty>") {
        ++declared[t.subject];
      }
    }
    for (const auto& [p, n] : declared) CHECK(n == 1);
    CHECK(declared.count("<urn:onto:vychislitelnaya-tekhnika/rel/partOf>") == 1);
  }

  TEST_CASE("base IRI option and validation") {
    const auto o = dsl::load("ontology \"t\"\nconcept \"A\" {}\n");
    exporter::ExportOptions opt;
    opt.base_iri = "http://example.org/onto#";
    const auto parsed = testing::check_turtle(exporter::export_turtle(o, opt));
    REQUIRE(parsed.ok());
    CHECK(parsed.triples.front().subject.starts_with("<http://example.org/onto#"));
    for (const char* bad : {"http://example.org/onto", "no scheme/", "http://exa mple.org/"}) {
      opt.base_iri = bad;
      CHECK_THROWS_AS(exporter::export_turtle(o, opt), Error);
    }
    CHECK(exporter::default_base_iri(o) == "urn:onto:t/");
  }

  TEST_CASE("dot output") {
    const auto single = dsl::load("ontology \"t\"\nconcept \"A\" {}\n");
    const auto dot = exporter::export_dot(single);
    CHECK(dot.starts_with("digraph"));
    CHECK(count_lines_matching(dot, std::regex(R"(\s*"[^"]+" \[label=.*\];)")) == 1);
    CHECK(count_lines_matching(dot, std::regex(R"(.*->.*)")) == 0);

    const auto wp = dsl::load(
        "ontology \"t\"\nconcept \"A\" {}\nconcept \"B\" {}\nedge \"B\" -whole_part-> \"A\"\n"
        "edge \"B\" -participant-> \"A\"\n");
    const auto wdot = exporter::export_dot(wp);
    CHECK(wdot.find("\"b\" -> \"a\" [label=\"whole_part\", style=solid];") != std::string::npos);
    CHECK(wdot.find("\"b\" -> \"a\" [label=\"participant\", style=dashed];") != std::string::npos);
  }

  TEST_CASE("fixture dot with levels") {
    const auto o = dsl::load(testing::fixture_text());
    exporter::ExportOptions opt;
    opt.include_levels = true;
    const auto dot = exporter::export_dot(o, opt);
    CHECK(count_lines_matching(dot, std::regex(R"(\s*"[^"]+" \[label=.*\];)")) == o.concepts().size());
    CHECK(count_lines_matching(dot, std::regex(R"(\s*"[^"]+" -> "[^"]+" \[.*\];)")) == o.edges().size());
    const auto r = hierarchy::rank(o);
    for (const auto& c : o.concepts()) {
      const std::string label = c.name + " (L" + std::to_string(r.levels.at(c.id)) + ")";
      CHECK(dot.find(label) != std::string::npos);
    }
  }

  TEST_CASE("json shape") {
    const auto o = dsl::load("ontology \"t\"\nconcept \"A\" {}\n");
    const auto j = exporter::export_json(o);
    CHECK(j.find("\"glossary\": {}") != std::string::npos);
    CHECK(j.back() == '\n');
    const auto fixture = dsl::load(testing::fixture_text());
    CHECK(exporter::export_json(fixture).find("\"concepts\": [") != std::string::npos);
    CHECK(exporter::import_json(exporter::export_json(fixture)).concepts().size() == 31);
  }

  TEST_CASE("json import errors and unknown fields") {
    try {
      exporter::import_json("{ not json");
      FAIL("expected SchemaError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SchemaError);
    }
    try {
      exporter::import_json(R"({"name": "t", "relations": [], "concepts": [{"id": 3}], "edges": [], "glossary": {}})");
      FAIL("expected SchemaError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SchemaError);
      CHECK(e.issues()[0].message.find("/concepts/0") != std::string::npos);
    }
    auto text = exporter::export_json(dsl::load("ontology \"t\"\nconcept \"A\" {}\n"));
    text.insert(1, "\"future\": 1,");
    std::vector<std::string> notes;
    const auto o = exporter::import_json(text, &notes);
    CHECK(o.concepts().size() == 1);
    REQUIRE(notes.size() == 1);
    CHECK(notes[0].find("future") != std::string::npos);
  }

  TEST_CASE("json round-trip on the fixture and generated ontologies") {
    const auto fixture = dsl::load(testing::fixture_text());
    CHECK(exporter::import_json(exporter::export_json(fixture)) == fixture);
    std::mt19937 rng(51);
    for (int i = 0; i < 300; ++i) {
      const auto o = testing::random_ontology(rng);
      const auto j = exporter::export_json(o);
      const auto back = exporter::import_json(j);
      CHECK(back == o);
      CHECK(exporter::export_json(back) == j);
    }
  }

  TEST_CASE("generated ontologies export valid turtle") {
    std::mt19937 rng(52);
    for (int i = 0; i < 200; ++i) {
      const auto o = testing::random_ontology(rng);
      const auto ttl = exporter::export_turtle(o);
      const auto parsed = testing::check_turtle(ttl);
      for (const auto& e : parsed.errors) MESSAGE(e);
      CHECK(parsed.ok());
      CHECK(exporter::export_turtle(o) == ttl);
      CHECK(exporter::export_dot(o) == exporter::export_dot(o));
    }
  }
}
