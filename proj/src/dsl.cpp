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

#include "ontoforge/dsl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ontoforge/glossary.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::dsl {

namespace {

enum class Tok { String, Ident, LBrace, RBrace, Semi, Colon, Comma, Equals, Dash, Arrow, End };

struct Token {
  Tok type;
  std::string value;
  SourceSpan span;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::String: return "string";
    case Tok::Ident: return "identifier";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Dash: return "'-'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "token";
}

[[noreturn]] void fail(ErrorKind kind, SourceSpan span, std::string message) {
  throw Error(Issue{kind, std::move(message), span, {}, {}, {}, {}});
}

bool is_ident_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const SourceSpan at = pos();
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, {}, at});
        return out;
      }
      const char c = src_[i_];
      switch (c) {
        case '{': advance(); out.push_back({Tok::LBrace, "{", at}); continue;
        case '}': advance(); out.push_back({Tok::RBrace, "}", at}); continue;
        case ';': advance(); out.push_back({Tok::Semi, ";", at}); continue;
        case ':': advance(); out.push_back({Tok::Colon, ":", at}); continue;
        case ',': advance(); out.push_back({Tok::Comma, ",", at}); continue;
        case '=': advance(); out.push_back({Tok::Equals, "=", at}); continue;
        case '-':
          advance();
          if (i_ < src_.size() && src_[i_] == '>') {
            advance();
            out.push_back({Tok::Arrow, "->", at});
          } else {
            out.push_back({Tok::Dash, "-", at});
          }
          continue;
        case '"': out.push_back({Tok::String, string_literal(), at}); continue;
        default: break;
      }
      if (!is_ident_byte(static_cast<unsigned char>(c))) {
        fail(ErrorKind::SyntaxError, at, std::string("unexpected character '") + c + "'");
      }
      std::string ident;
      while (i_ < src_.size() && is_ident_byte(static_cast<unsigned char>(src_[i_]))) {
        ident.push_back(src_[i_]);
        advance();
      }
      out.push_back({Tok::Ident, std::move(ident), at});
    }
  }

 private:
  SourceSpan pos() const { return {line_, col_}; }

  // Columns count code points: the column moves once the last byte of a
  // UTF-8 sequence has been consumed.
  void advance() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
      return;
    }
    if (i_ >= src_.size() || (static_cast<unsigned char>(src_[i_]) & 0xC0) != 0x80) ++col_;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string string_literal() {
    const SourceSpan start = pos();
    advance();  // opening quote
    std::string out;
    for (;;) {
      if (i_ >= src_.size() || src_[i_] == '\n') {
        fail(ErrorKind::SyntaxError, start, "unterminated string literal, expected '\"'");
      }
      const char c = src_[i_];
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        const SourceSpan esc = pos();
        advance();
        if (i_ >= src_.size()) fail(ErrorKind::SyntaxError, esc, "unterminated escape sequence");
        const char e = src_[i_];
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: fail(ErrorKind::SyntaxError, esc, std::string("unknown escape '\\") + e + "'");
        }
        advance();
        continue;
      }
      out.push_back(c);
      advance();
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SourceDocument run() {
    SourceDocument doc;
    bool have_header = false;
    std::set<std::string> concept_names;
    std::set<std::string> relation_ids;
    while (peek().type != Tok::End) {
      const Token& t = peek();
      if (t.type != Tok::Ident) fail(ErrorKind::SyntaxError, t.span, "expected a statement, found " + found(t));
      if (t.value == "ontology") {
        if (have_header) fail(ErrorKind::DuplicateBlock, t.span, "duplicate 'ontology' header");
        next();
        const Token& name = expect(Tok::String, "ontology name");
        doc.ontology_name = name.value;
        doc.name_span = t.span;
        have_header = true;
        continue;
      }
      if (t.value != "relation" && t.value != "concept" && t.value != "edge") {
        fail(ErrorKind::UnknownDirective, t.span, "unknown directive '" + t.value + "'");
      }
      if (!have_header) fail(ErrorKind::SyntaxError, t.span, "expected 'ontology' header before '" + t.value + "'");
      if (t.value == "relation") {
        auto decl = relation_decl();
        if (!relation_ids.insert(decl.id).second) {
          fail(ErrorKind::DuplicateBlock, decl.span,
               "duplicate relation '" + decl.id + "' on line " + std::to_string(decl.span.line));
        }
        doc.relations.push_back(std::move(decl));
      } else if (t.value == "concept") {
        auto block = concept_block();
        if (!concept_names.insert(block.name).second) {
          fail(ErrorKind::DuplicateBlock, block.span,
               "duplicate concept block '" + block.name + "' on line " + std::to_string(block.span.line));
        }
        doc.concepts.push_back(std::move(block));
      } else {
        doc.edges.push_back(edge_stmt());
      }
    }
    if (!have_header) fail(ErrorKind::SyntaxError, peek().span, "expected 'ontology' header");
    return doc;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  static std::string found(const Token& t) {
    if (t.type == Tok::Ident) return "'" + t.value + "'";
    return std::string(describe(t.type));
  }

  const Token& expect(Tok type, std::string_view what) {
    const Token& t = peek();
    if (t.type != type) {
      fail(ErrorKind::SyntaxError, t.span,
           "expected " + std::string(what) + " (" + std::string(describe(type)) + "), found " + found(t));
    }
    return next();
  }

  RelationDecl relation_decl() {
    RelationDecl d;
    d.span = next().span;
    d.id = expect(Tok::Ident, "relation id").value;
    d.label = expect(Tok::String, "relation label").value;
    while (peek().type == Tok::Ident && (peek().value == "partial_order" || peek().value == "hierarchical")) {
      (next().value == "partial_order" ? d.partial_order : d.hierarchical) = true;
    }
    return d;
  }

  ConceptBlock concept_block() {
    ConceptBlock b;
    b.span = next().span;
    b.name = expect(Tok::String, "concept name").value;
    expect(Tok::LBrace, "'{'");
    std::set<std::string> seen;
    while (peek().type != Tok::RBrace) {
      const Token& key = expect(Tok::Ident, "'kind', 'category', 'manual', 'attrs', 'def' or '}'");
      if (!seen.insert(key.value).second) {
        fail(ErrorKind::SyntaxError, key.span, "'" + key.value + "' given twice in concept block");
      }
      if (key.value == "category") {
        b.category = true;
      } else if (key.value == "manual") {
        b.manual = true;
      } else if (key.value == "kind") {
        expect(Tok::Colon, "':'");
        kind_settings(b.kind);
      } else if (key.value == "attrs") {
        expect(Tok::Colon, "':'");
        b.attributes.push_back(attribute());
        while (peek().type == Tok::Comma) {
          next();
          b.attributes.push_back(attribute());
        }
      } else if (key.value == "def") {
        expect(Tok::Colon, "':'");
        b.definition = expect(Tok::String, "definition text").value;
      } else {
        fail(ErrorKind::SyntaxError, key.span,
             "expected 'kind', 'category', 'manual', 'attrs' or 'def', found '" + key.value + "'");
      }
      if (peek().type == Tok::Semi) {
        next();
      } else if (peek().type != Tok::RBrace) {
        fail(ErrorKind::SyntaxError, peek().span, "expected ';' or '}', found " + found(peek()));
      }
    }
    next();
    return b;
  }

  void kind_settings(ConceptKind& kind) {
    std::string axes;
    for (auto a : kKindAxes) axes += (axes.empty() ? "" : ", ") + std::string(a);
    const Token* axis = &expect(Tok::Ident, "kind axis (" + axes + ")");
    for (;;) {
      expect(Tok::Equals, "'='");
      const Token& value = expect(Tok::Ident, "kind value");
      if (kind_axis_values(axis->value).empty()) {
        fail(ErrorKind::SyntaxError, axis->span, "expected kind axis (" + axes + "), found '" + axis->value + "'");
      }
      if (!set_kind_axis(kind, axis->value, value.value)) {
        std::string values;
        for (auto v : kind_axis_values(axis->value)) values += (values.empty() ? "" : ", ") + std::string(v);
        fail(ErrorKind::SyntaxError, value.span,
             "expected " + axis->value + " value (" + values + "), found '" + value.value + "'");
      }
      if (peek().type != Tok::Ident) return;
      axis = &next();
    }
  }

  std::string attribute() {
    const Token& t = peek();
    if (t.type != Tok::Ident && t.type != Tok::String) {
      fail(ErrorKind::SyntaxError, t.span, "expected attribute name, found " + found(t));
    }
    return next().value;
  }

  EdgeStmt edge_stmt() {
    EdgeStmt e;
    e.span = next().span;
    e.source = expect(Tok::String, "source concept name").value;
    expect(Tok::Dash, "'-<relation>->'");
    e.relation = expect(Tok::Ident, "relation id").value;
    expect(Tok::Arrow, "'->'");
    e.target = expect(Tok::String, "target concept name").value;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out += '"';
  return out;
}

bool bare_ident(std::string_view s) {
  if (s.empty()) return false;
  for (char32_t cp : text::decode(s)) {
    if (!text::is_word_char(cp)) return false;
  }
  return true;
}

std::string key_of(std::string_view name) {
  auto id = text::slugify(name);
  return id;
}

}  // namespace

SourceDocument parse(std::string_view input) {
  std::string owned(input);
  text::strip_bom(owned);
  return Parser(Lexer(owned).run()).run();
}

SourceDocument canonicalize(SourceDocument doc) {
  std::stable_sort(doc.relations.begin(), doc.relations.end(),
                   [](const RelationDecl& a, const RelationDecl& b) { return a.id < b.id; });
  std::stable_sort(doc.concepts.begin(), doc.concepts.end(), [](const ConceptBlock& a, const ConceptBlock& b) {
    return std::make_pair(key_of(a.name), a.name) < std::make_pair(key_of(b.name), b.name);
  });
  std::stable_sort(doc.edges.begin(), doc.edges.end(), [](const EdgeStmt& a, const EdgeStmt& b) {
    return std::make_tuple(key_of(a.source), a.relation, key_of(a.target), a.source, a.target) <
           std::make_tuple(key_of(b.source), b.relation, key_of(b.target), b.source, b.target);
  });
  return doc;
}

std::string serialize(const SourceDocument& input) {
  const SourceDocument doc = canonicalize(input);
  std::string out = "ontology " + quote(doc.ontology_name) + "\n";
  if (!doc.relations.empty()) out += "\n";
  for (const auto& r : doc.relations) {
    out += "relation " + r.id + " " + quote(r.label);
    if (r.partial_order) out += " partial_order";
    if (r.hierarchical) out += " hierarchical";
    out += "\n";
  }
  for (const auto& c : doc.concepts) {
    std::vector<std::string> items;
    const auto axes = specified_axes(c.kind);
    if (!axes.empty()) {
      std::string k = "kind:";
      for (const auto& [axis, value] : axes) k += " " + std::string(axis) + "=" + std::string(value);
      items.push_back(std::move(k));
    }
    if (c.category) items.emplace_back("category");
    if (c.manual) items.emplace_back("manual");
    if (!c.attributes.empty()) {
      std::string a = "attrs:";
      for (std::size_t i = 0; i < c.attributes.size(); ++i) {
        a += (i == 0 ? " " : ", ");
        a += bare_ident(c.attributes[i]) ? c.attributes[i] : quote(c.attributes[i]);
      }
      items.push_back(std::move(a));
    }
    if (c.definition) items.push_back("def: " + quote(*c.definition));
    out += "\nconcept " + quote(c.name) + " {";
    if (items.empty()) {
      out += "}\n";
      continue;
    }
    out += "\n";
    for (const auto& item : items) out += "  " + item + ";\n";
    out += "}\n";
  }
  if (!doc.edges.empty()) out += "\n";
  for (const auto& e : doc.edges) {
    out += "edge " + quote(e.source) + " -" + e.relation + "-> " + quote(e.target) + "\n";
  }
  return out;
}

bool structurally_equal(const SourceDocument& a_in, const SourceDocument& b_in) {
  const auto a = canonicalize(a_in);
  const auto b = canonicalize(b_in);
  if (a.ontology_name != b.ontology_name) return false;
  const auto rel_eq = [](const RelationDecl& x, const RelationDecl& y) {
    return std::tie(x.id, x.label, x.partial_order, x.hierarchical) ==
           std::tie(y.id, y.label, y.partial_order, y.hierarchical);
  };
  const auto concept_eq = [](const ConceptBlock& x, const ConceptBlock& y) {
    return std::tie(x.name, x.kind, x.category, x.manual, x.attributes, x.definition) ==
           std::tie(y.name, y.kind, y.category, y.manual, y.attributes, y.definition);
  };
  const auto edge_eq = [](const EdgeStmt& x, const EdgeStmt& y) {
    return std::tie(x.source, x.relation, x.target) == std::tie(y.source, y.relation, y.target);
  };
  return std::equal(a.relations.begin(), a.relations.end(), b.relations.begin(), b.relations.end(), rel_eq) &&
         std::equal(a.concepts.begin(), a.concepts.end(), b.concepts.begin(), b.concepts.end(), concept_eq) &&
         std::equal(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), edge_eq);
}

Ontology lower(const SourceDocument& doc) {
  std::vector<RelationType> relations;
  for (const auto& r : doc.relations) relations.push_back({r.id, r.label, r.partial_order, r.hierarchical});

  std::vector<Concept> concepts;
  glossary::TermTable terms;
  std::set<std::string> ids;
  for (const auto& b : doc.concepts) {
    Concept c;
    c.id = text::slugify(b.name);
    c.name = b.name;
    c.kind = b.kind;
    c.attributes = b.attributes;
    c.is_category = b.category;
    if (!c.id.empty()) {
      terms.emplace(b.name, c.id);
      ids.insert(c.id);
    }
    concepts.push_back(std::move(c));
  }

  std::vector<Issue> unresolved;
  std::vector<Edge> edges;
  for (const auto& s : doc.edges) {
    Edge e{text::slugify(s.source), text::slugify(s.target), s.relation};
    for (const auto* name : {&s.source, &s.target}) {
      const auto id = text::slugify(*name);
      if (id.empty() || !ids.contains(id)) {
        unresolved.push_back(Issue{ErrorKind::UnresolvedConceptName,
                                   "no concept block for '" + *name + "' (line " + std::to_string(s.span.line) + ")",
                                   s.span, {}, {}, {}, {*name}});
      }
    }
    edges.push_back(std::move(e));
  }
  if (!unresolved.empty()) throw Error(std::move(unresolved));

  Glossary gloss;
  for (const auto& b : doc.concepts) {
    if (!b.definition && !b.manual) continue;
    const auto id = text::slugify(b.name);
    if (id.empty()) continue;
    Definition d;
    d.concept_id = id;
    d.text = b.definition.value_or("");
    d.referenced = glossary::extract_references(d.text, terms, id);
    d.manual = b.manual;
    gloss[id] = std::move(d);
  }

  try {
    return build_ontology(doc.ontology_name, std::move(concepts), std::move(edges), std::move(gloss),
                          std::move(relations));
  } catch (const Error& err) {
    std::vector<Issue> issues = err.issues();
    const auto at = [](const SourceSpan& s) { return std::to_string(s.line) + ":" + std::to_string(s.column); };
    for (auto& is : issues) {
      if (is.concept_index && *is.concept_index < doc.concepts.size()) {
        is.span = doc.concepts[*is.concept_index].span;
      }
      if (is.edge_index && *is.edge_index < doc.edges.size()) {
        is.span = doc.edges[*is.edge_index].span;
        if (is.other_edge_index && *is.other_edge_index < doc.edges.size()) {
          is.message += " (first at " + at(doc.edges[*is.other_edge_index].span) + ", again at " +
                        at(*is.span) + ")";
        }
      }
      if (is.kind == ErrorKind::HierarchicalCycle && is.subjects.size() >= 2) {
        for (const auto& s : doc.edges) {
          if (text::slugify(s.source) == is.subjects[0] && text::slugify(s.target) == is.subjects[1]) {
            is.span = s.span;
            break;
          }
        }
      }
      if (is.kind == ErrorKind::EmptyConceptSet) is.span = doc.name_span;
    }
    throw Error(std::move(issues));
  }
}

SourceDocument to_document(const Ontology& o) {
  SourceDocument doc;
  doc.ontology_name = o.name();
  for (const auto& r : o.user_relations()) {
    doc.relations.push_back({r.id, r.label, r.is_partial_order, r.is_hierarchical, {}});
  }
  for (const auto& c : o.concepts()) {
    ConceptBlock b;
    b.name = c.name;
    b.kind = c.kind;
    b.category = c.is_category;
    b.attributes = c.attributes;
    if (const auto it = o.glossary().find(c.id); it != o.glossary().end()) {
      b.manual = it->second.manual;
      if (!it->second.text.empty() || !it->second.manual) b.definition = it->second.text;
    }
    doc.concepts.push_back(std::move(b));
  }
  for (const auto& e : o.edges()) {
    doc.edges.push_back({o.find(e.source)->name, e.relation, o.find(e.target)->name, {}});
  }
  return canonicalize(std::move(doc));
}

Ontology load(std::string_view text) { return lower(parse(text)); }

}  // namespace ontoforge::dsl
