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

#include "ontoforge/export.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <tuple>

#include "json.hpp"

#include "ontoforge/hierarchy.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::exporter {

namespace {

using nlohmann::json;

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";

std::string language_of(std::string_view s) {
  for (char32_t cp : text::decode(s)) {
    if (text::is_cyrillic(cp)) return "ru";
  }
  return "en";
}

std::string turtle_literal(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out += "\"@" + language_of(s);
  return out;
}

bool safe_local(std::string_view s) {
  if (s.empty() || s.front() == '-') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

std::string percent_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_' ||
        c == '.' || c == '~') {
      out.push_back(ch);
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string property_name(std::string_view relation_id) {
  if (relation_id == "whole_part") return "partOf";
  return std::string(relation_id);
}

// Subject and object terms carry their full IRI for sorting plus the text
// written out.
struct Term {
  std::string iri;
  std::string written;
};

class TurtleBuilder {
 public:
  explicit TurtleBuilder(std::string base) : base_(std::move(base)), rel_(base_ + "rel/") {}

  Term cls(std::string_view id) const { return local(base_, ":", id); }
  Term prop(std::string_view name) const { return local(rel_, "rel:", name); }
  static Term vocab(std::string_view ns, std::string_view prefix, std::string_view name) {
    return {std::string(ns) + std::string(name), std::string(prefix) + std::string(name)};
  }
  Term ontology() const { return {base_, "<" + base_ + ">"}; }

  void add(const Term& s, const Term& p, std::string object) {
    triples_.insert({s.iri, p.iri, object, s.written, p.written});
  }

  std::string render() const {
    std::string out;
    out += "@prefix : <" + base_ + "> .\n";
    out += "@prefix owl: <" + std::string(kOwl) + "> .\n";
    out += "@prefix rdf: <" + std::string(kRdf) + "> .\n";
    out += "@prefix rdfs: <" + std::string(kRdfs) + "> .\n";
    out += "@prefix rel: <" + rel_ + "> .\n";
    out += "@prefix skos: <" + std::string(kSkos) + "> .\n";
    const std::string* current = nullptr;
    for (const auto& t : triples_) {
      if (current == nullptr || *current != t.subject) {
        if (current != nullptr) out += " .\n";
        out += "\n" + t.subject_written + "\n";
        current = &t.subject;
      } else {
        out += " ;\n";
      }
      out += "    " + (t.predicate == std::string(kRdf) + "type" ? std::string("a") : t.predicate_written) + " " +
             t.object;
    }
    if (current != nullptr) out += " .\n";
    return out;
  }

 private:
  static Term local(const std::string& ns, std::string_view prefix, std::string_view name) {
    if (safe_local(name)) return {ns + std::string(name), std::string(prefix) + std::string(name)};
    const std::string iri = ns + percent_encode(name);
    return {iri, "<" + iri + ">"};
  }

  struct Triple {
    std::string subject;
    std::string predicate;
    std::string object;
    std::string subject_written;
    std::string predicate_written;
    bool operator<(const Triple& o) const {
      return std::tie(subject, predicate, object) < std::tie(o.subject, o.predicate, o.object);
    }
  };

  std::string base_;
  std::string rel_;
  std::set<Triple> triples_;
};

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  out += '"';
  return out;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(Issue{ErrorKind::SchemaError, path + ": " + message, std::nullopt, {}, {}, {}, {path}});
}

const json& field(const json& obj, const std::string& path, const char* key, json::value_t type) {
  const auto it = obj.find(key);
  const std::string where = path + "/" + key;
  if (it == obj.end()) schema_error(where, "missing field");
  const bool ok = it->type() == type ||
                  (type == json::value_t::number_integer && it->type() == json::value_t::number_unsigned);
  if (!ok) schema_error(where, std::string("expected ") + json(type).type_name() + ", found " + it->type_name());
  return *it;
}

std::vector<std::string> string_array(const json& arr, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) schema_error(path + "/" + std::to_string(i), "expected string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

void note_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> known,
                  std::vector<std::string>* notes) {
  if (notes == nullptr) return;
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; })) {
      notes->push_back("ignored unknown field " + path + "/" + key);
    }
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "turtle" || s == "ttl") return Format::turtle;
  if (s == "dot") return Format::dot;
  if (s == "json") return Format::json;
  return std::nullopt;
}

std::string default_base_iri(const Ontology& o) {
  auto slug = text::slugify(o.name());
  if (slug.empty()) slug = "ontology";
  return "urn:onto:" + slug + "/";
}

bool valid_base_iri(std::string_view iri) {
  static const std::regex kIri(R"(^[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>"{}|^`\\]*[/#]$)");
  return std::regex_match(iri.begin(), iri.end(), kIri);
}

std::string export_turtle(const Ontology& o, const ExportOptions& options) {
  const std::string base = options.base_iri.empty() ? default_base_iri(o) : options.base_iri;
  if (!valid_base_iri(base)) {
    throw Error(ErrorKind::InvalidBaseIri, "'" + base + "' is not an IRI prefix ending in '/' or '#'");
  }
  TurtleBuilder tb(base);
  const Term type = TurtleBuilder::vocab(kRdf, "rdf:", "type");
  const Term label = TurtleBuilder::vocab(kRdfs, "rdfs:", "label");
  const Term sub_class_of = TurtleBuilder::vocab(kRdfs, "rdfs:", "subClassOf");
  const Term definition = TurtleBuilder::vocab(kSkos, "skos:", "definition");
  const Term owl_class = TurtleBuilder::vocab(kOwl, "owl:", "Class");
  const Term object_property = TurtleBuilder::vocab(kOwl, "owl:", "ObjectProperty");
  const Term annotation_property = TurtleBuilder::vocab(kOwl, "owl:", "AnnotationProperty");
  const Term attribute = tb.prop("attribute");
  const Term category = tb.prop("category");

  tb.add(tb.ontology(), type, TurtleBuilder::vocab(kOwl, "owl:", "Ontology").written);
  tb.add(tb.ontology(), label, turtle_literal(o.name()));

  bool any_attribute = false;
  bool any_category = false;
  for (const auto& c : o.concepts()) {
    const Term subject = tb.cls(c.id);
    tb.add(subject, type, owl_class.written);
    tb.add(subject, label, turtle_literal(c.name));
    for (const auto& a : c.attributes) {
      tb.add(subject, attribute, turtle_literal(a));
      any_attribute = true;
    }
    if (c.is_category) {
      tb.add(subject, category, "true");
      any_category = true;
    }
    if (const auto it = o.glossary().find(c.id); it != o.glossary().end() && !it->second.text.empty()) {
      tb.add(subject, definition, turtle_literal(it->second.text));
    }
  }
  if (any_attribute) tb.add(attribute, type, annotation_property.written);
  if (any_category) tb.add(category, type, annotation_property.written);

  std::set<std::string> declared;
  for (const auto& e : o.edges()) {
    const Term subject = tb.cls(e.source);
    const Term object = tb.cls(e.target);
    if (e.relation == "genus_species") {
      tb.add(subject, sub_class_of, object.written);
      continue;
    }
    const Term property = tb.prop(property_name(e.relation));
    tb.add(subject, property, object.written);
    if (declared.insert(e.relation).second) {
      tb.add(property, type, object_property.written);
      if (const auto* r = o.relation(e.relation)) tb.add(property, label, turtle_literal(r->label));
    }
  }
  return tb.render();
}

std::string export_dot(const Ontology& o, const ExportOptions& options) {
  std::map<std::string, int> levels;
  if (options.include_levels) levels = hierarchy::rank(o).levels;

  std::string out = "digraph " + dot_quote(o.name()) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (const auto& c : o.concepts()) {
    std::string lbl = c.name;
    if (options.include_levels) lbl += " (L" + std::to_string(levels.at(c.id)) + ")";
    out += "  " + dot_quote(c.id) + " [label=" + dot_quote(lbl);
    if (c.is_category) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& e : o.edges()) {
    out += "  " + dot_quote(e.source) + " -> " + dot_quote(e.target) + " [label=" + dot_quote(e.relation) +
           ", style=" + (o.is_hierarchical(e) ? "solid" : "dashed") + "];\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const Ontology& o) {
  json relations = json::array();
  for (const auto& r : o.relations()) {
    relations.push_back({{"id", r.id},
                         {"label", r.label},
                         {"partial_order", r.is_partial_order},
                         {"hierarchical", r.is_hierarchical}});
  }
  json concepts = json::array();
  for (const auto& c : o.concepts()) {
    json kind = json::object();
    for (auto axis : kKindAxes) kind[std::string(axis)] = "unspecified";
    for (const auto& [axis, value] : specified_axes(c.kind)) kind[std::string(axis)] = std::string(value);
    concepts.push_back({{"id", c.id},
                        {"name", c.name},
                        {"kind", kind},
                        {"attributes", c.attributes},
                        {"is_category", c.is_category},
                        {"defined", c.defined}});
  }
  json edges = json::array();
  for (const auto& e : o.edges()) {
    edges.push_back({{"source", e.source}, {"target", e.target}, {"relation", e.relation}});
  }
  json glossary = json::object();
  for (const auto& [id, d] : o.glossary()) {
    glossary[id] = {{"concept_id", d.concept_id},
                    {"text", d.text},
                    {"referenced", d.referenced},
                    {"attributes", d.attributes},
                    {"manual", d.manual}};
  }
  const json doc = {
      {"name", o.name()}, {"relations", relations}, {"concepts", concepts}, {"edges", edges}, {"glossary", glossary}};
  return doc.dump(2) + "\n";
}

Ontology import_json(std::string_view text, std::vector<std::string>* notes) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("", "expected object");
  note_unknown(doc, "", {"name", "relations", "concepts", "edges", "glossary"}, notes);

  const std::string name = field(doc, "", "name", json::value_t::string).get<std::string>();

  std::vector<RelationType> user_relations;
  const auto& rels = field(doc, "", "relations", json::value_t::array);
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string path = "/relations/" + std::to_string(i);
    const auto& r = rels[i];
    if (!r.is_object()) schema_error(path, "expected object");
    note_unknown(r, path, {"id", "label", "partial_order", "hierarchical"}, notes);
    RelationType rt{field(r, path, "id", json::value_t::string).get<std::string>(),
                    field(r, path, "label", json::value_t::string).get<std::string>(),
                    field(r, path, "partial_order", json::value_t::boolean).get<bool>(),
                    field(r, path, "hierarchical", json::value_t::boolean).get<bool>()};
    if (is_builtin_relation(rt.id)) {
      const auto& reg = builtin_relations();
      const auto it = std::find_if(reg.begin(), reg.end(), [&](const RelationType& b) { return b.id == rt.id; });
      if (*it != rt) schema_error(path, "built-in relation '" + rt.id + "' redefined");
      continue;
    }
    user_relations.push_back(std::move(rt));
  }

  std::vector<Concept> concepts;
  const auto& cs = field(doc, "", "concepts", json::value_t::array);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string path = "/concepts/" + std::to_string(i);
    const auto& c = cs[i];
    if (!c.is_object()) schema_error(path, "expected object");
    note_unknown(c, path, {"id", "name", "kind", "attributes", "is_category", "defined"}, notes);
    Concept item;
    item.id = field(c, path, "id", json::value_t::string).get<std::string>();
    item.name = field(c, path, "name", json::value_t::string).get<std::string>();
    item.attributes = string_array(field(c, path, "attributes", json::value_t::array), path + "/attributes");
    item.is_category = field(c, path, "is_category", json::value_t::boolean).get<bool>();
    if (const auto it = c.find("kind"); it != c.end()) {
      if (!it->is_object()) schema_error(path + "/kind", "expected object");
      for (const auto& [axis, value] : it->items()) {
        if (!value.is_string() || !set_kind_axis(item.kind, axis, value.get<std::string>())) {
          schema_error(path + "/kind/" + axis, "unknown kind axis or value");
        }
      }
    }
    if (item.id.empty()) schema_error(path + "/id", "empty id");
    concepts.push_back(std::move(item));
  }

  std::vector<Edge> edges;
  const auto& es = field(doc, "", "edges", json::value_t::array);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const auto& e = es[i];
    if (!e.is_object()) schema_error(path, "expected object");
    note_unknown(e, path, {"source", "target", "relation"}, notes);
    edges.push_back({field(e, path, "source", json::value_t::string).get<std::string>(),
                     field(e, path, "target", json::value_t::string).get<std::string>(),
                     field(e, path, "relation", json::value_t::string).get<std::string>()});
  }

  Glossary glossary;
  const auto& gs = field(doc, "", "glossary", json::value_t::object);
  for (const auto& [key, d] : gs.items()) {
    const std::string path = "/glossary/" + key;
    if (!d.is_object()) schema_error(path, "expected object");
    note_unknown(d, path, {"concept_id", "text", "referenced", "attributes", "manual"}, notes);
    Definition def;
    def.concept_id = field(d, path, "concept_id", json::value_t::string).get<std::string>();
    def.text = field(d, path, "text", json::value_t::string).get<std::string>();
    def.referenced = string_array(field(d, path, "referenced", json::value_t::array), path + "/referenced");
    def.manual = field(d, path, "manual", json::value_t::boolean).get<bool>();
    glossary.emplace(key, std::move(def));
  }

  return build_ontology(name, std::move(concepts), std::move(edges), std::move(glossary),
                        std::move(user_relations));
}

std::string export_as(const Ontology& o, const ExportOptions& options) {
  switch (options.format) {
    case Format::turtle: return export_turtle(o, options);
    case Format::dot: return export_dot(o, options);
    case Format::json: return export_json(o);
  }
  return export_json(o);
}

}  // namespace ontoforge::exporter
