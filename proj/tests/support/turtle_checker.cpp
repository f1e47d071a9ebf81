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

#include "turtle_checker.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace ontoforge::testing {

namespace {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void put_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// [163s] PN_CHARS_BASE
bool pn_chars_base(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= 0xC0 && c <= 0xD6) || (c >= 0xD8 && c <= 0xF6) ||
         (c >= 0xF8 && c <= 0x2FF) || (c >= 0x370 && c <= 0x37D) || (c >= 0x37F && c <= 0x1FFF) ||
         (c >= 0x200C && c <= 0x200D) || (c >= 0x2070 && c <= 0x218F) || (c >= 0x2C00 && c <= 0x2FEF) ||
         (c >= 0x3001 && c <= 0xD7FF) || (c >= 0xF900 && c <= 0xFDCF) || (c >= 0xFDF0 && c <= 0xFFFD) ||
         (c >= 0x10000 && c <= 0xEFFFF);
}
// [164s] PN_CHARS_U
bool pn_chars_u(char32_t c) { return pn_chars_base(c) || c == '_'; }
// [166s] PN_CHARS
bool pn_chars(char32_t c) {
  return pn_chars_u(c) || c == '-' || (c >= '0' && c <= '9') || c == 0xB7 || (c >= 0x300 && c <= 0x36F) ||
         (c >= 0x203F && c <= 0x2040);
}
bool is_hex(char32_t c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

class Parser {
 public:
  explicit Parser(std::string_view text) {
    // Decode up front; reject malformed UTF-8.
    std::size_t i = 0;
    int line = 1;
    while (i < text.size()) {
      const auto b = static_cast<unsigned char>(text[i]);
      char32_t cp;
      int len;
      if (b < 0x80) {
        cp = b;
        len = 1;
      } else if ((b & 0xE0) == 0xC0) {
        cp = b & 0x1F;
        len = 2;
      } else if ((b & 0xF0) == 0xE0) {
        cp = b & 0x0F;
        len = 3;
      } else if ((b & 0xF8) == 0xF0) {
        cp = b & 0x07;
        len = 4;
      } else {
        throw Failure("line " + std::to_string(line) + ": invalid UTF-8");
      }
      if (i + len > text.size()) throw Failure("line " + std::to_string(line) + ": truncated UTF-8");
      for (int k = 1; k < len; ++k) {
        const auto cb = static_cast<unsigned char>(text[i + k]);
        if ((cb & 0xC0) != 0x80) throw Failure("line " + std::to_string(line) + ": invalid UTF-8");
        cp = (cp << 6) | (cb & 0x3F);
      }
      cps_.push_back(cp);
      lines_.push_back(line);
      if (cp == '\n') ++line;
      i += len;
    }
    lines_.push_back(line);
  }

  TurtleResult run() {
    TurtleResult result;
    try {
      turtle_doc();
    } catch (const Failure& f) {
      result.errors.push_back(f.what());
    }
    result.triples = std::move(triples_);
    return result;
  }

 private:
  // [1] turtleDoc ::= statement*
  void turtle_doc() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
  }

  // [2] statement ::= directive | triples '.'
  void statement() {
    if (peek() == '@') {
      if (lookahead_keyword("@prefix", true)) {
        pos_ += 7;
        prefix_id(true);
      } else if (lookahead_keyword("@base", true)) {
        pos_ += 5;
        base(true);
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (lookahead_keyword("PREFIX", false)) {
      pos_ += 6;
      prefix_id(false);
      return;
    }
    if (lookahead_keyword("BASE", false)) {
      pos_ += 4;
      base(false);
      return;
    }
    triples();
    skip_ws();
    expect('.');
  }

  // [4] prefixID / [6s] sparqlPrefix
  void prefix_id(bool turtle_style) {
    skip_ws();
    std::string prefix = pname_ns();
    skip_ws();
    std::string iri = iriref();
    prefixes_[prefix] = iri;
    if (turtle_style) {
      skip_ws();
      expect('.');
    }
  }

  // [5] base / [5s] sparqlBase
  void base(bool turtle_style) {
    skip_ws();
    base_ = iriref();
    if (turtle_style) {
      skip_ws();
      expect('.');
    }
  }

  // [6] triples ::= subject predicateObjectList | blankNodePropertyList predicateObjectList?
  void triples() {
    if (peek() == '[') {
      std::size_t probe = pos_ + 1;
      while (probe < cps_.size() && (cps_[probe] == ' ' || cps_[probe] == '\t' || cps_[probe] == '\n' ||
                                     cps_[probe] == '\r')) {
        ++probe;
      }
      if (probe < cps_.size() && cps_[probe] == ']') {
        const std::string s = blank_node();
        skip_ws();
        predicate_object_list(s);
        return;
      }
      const std::string node = blank_node_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(node);
      return;
    }
    const std::string s = subject();
    skip_ws();
    predicate_object_list(s);
  }

  // [7] predicateObjectList ::= verb objectList (';' (verb objectList)?)*
  void predicate_object_list(const std::string& s) {
    std::string p = verb();
    skip_ws();
    object_list(s, p);
    skip_ws();
    while (peek() == ';') {
      ++pos_;
      skip_ws();
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '.' || peek() == ']' || at_end()) return;
      p = verb();
      skip_ws();
      object_list(s, p);
      skip_ws();
    }
  }

  // [8] objectList ::= object (',' object)*
  void object_list(const std::string& s, const std::string& p) {
    triples_.push_back({s, p, object()});
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      skip_ws();
      triples_.push_back({s, p, object()});
      skip_ws();
    }
  }

  // [9] verb ::= predicate | 'a'
  std::string verb() {
    if (peek() == 'a') {
      const char32_t next = peek(1);
      if (next == ' ' || next == '\t' || next == '\n' || next == '\r' || next == '<' || next == '"' ||
          next == '\'' || next == '[' || next == '(') {
        ++pos_;
        return "<" + std::string(kRdf) + "type>";
      }
    }
    return iri();
  }

  // [10] subject ::= iri | BlankNode | collection
  std::string subject() {
    if (peek() == '(') return collection();
    if (peek() == '_' || peek() == '[') return blank_node();
    return iri();
  }

  // [12] object ::= iri | BlankNode | collection | blankNodePropertyList | literal
  std::string object() {
    const char32_t c = peek();
    if (c == '(') return collection();
    if (c == '[') {
      // ANON or a property list.
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (peek() == ']') {
        ++pos_;
        return fresh_blank();
      }
      pos_ = save;
      return blank_node_property_list();
    }
    if (c == '_') return blank_node();
    if (c == '"' || c == '\'') return rdf_literal();
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return numeric_literal();
    if (lookahead_word("true")) {
      pos_ += 4;
      return "\"true\"^^<" + std::string(kXsd) + "boolean>";
    }
    if (lookahead_word("false")) {
      pos_ += 5;
      return "\"false\"^^<" + std::string(kXsd) + "boolean>";
    }
    return iri();
  }

  // [14] blankNodePropertyList ::= '[' predicateObjectList ']'
  std::string blank_node_property_list() {
    expect('[');
    skip_ws();
    const std::string node = fresh_blank();
    predicate_object_list(node);
    skip_ws();
    expect(']');
    return node;
  }

  // [15] collection ::= '(' object* ')'
  std::string collection() {
    expect('(');
    skip_ws();
    std::vector<std::string> items;
    while (peek() != ')') {
      if (at_end()) fail("unterminated collection");
      items.push_back(object());
      skip_ws();
    }
    ++pos_;
    const std::string nil = "<" + std::string(kRdf) + "nil>";
    if (items.empty()) return nil;
    std::string head = fresh_blank();
    std::string cur = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      triples_.push_back({cur, "<" + std::string(kRdf) + "first>", items[i]});
      const std::string next = i + 1 < items.size() ? fresh_blank() : nil;
      triples_.push_back({cur, "<" + std::string(kRdf) + "rest>", next});
      cur = next;
    }
    return head;
  }

  // [16] NumericLiteral
  std::string numeric_literal() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += static_cast<char>(cps_[pos_++]);
    bool digits_before = false, dot = false, digits_after = false, exponent = false;
    while (peek() >= '0' && peek() <= '9') {
      lex += static_cast<char>(cps_[pos_++]);
      digits_before = true;
    }
    if (peek() == '.' && peek(1) >= '0' && peek(1) <= '9') {
      dot = true;
      lex += static_cast<char>(cps_[pos_++]);
      while (peek() >= '0' && peek() <= '9') {
        lex += static_cast<char>(cps_[pos_++]);
        digits_after = true;
      }
    }
    if (peek() == 'e' || peek() == 'E') {
      exponent = true;
      lex += static_cast<char>(cps_[pos_++]);
      if (peek() == '+' || peek() == '-') lex += static_cast<char>(cps_[pos_++]);
      bool any = false;
      while (peek() >= '0' && peek() <= '9') {
        lex += static_cast<char>(cps_[pos_++]);
        any = true;
      }
      if (!any) fail("malformed exponent");
    }
    if (!digits_before && !digits_after) fail("malformed number");
    const char* type = exponent ? "double" : dot ? "decimal" : "integer";
    return "\"" + lex + "\"^^<" + std::string(kXsd) + type + ">";
  }

  // [128s] RDFLiteral ::= String (LANGTAG | '^^' iri)?
  std::string rdf_literal() {
    const std::string lex = string_literal();
    if (peek() == '@') {
      ++pos_;
      std::string tag;
      // [144s] LANGTAG ::= '@' [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
      auto alpha = [](char32_t c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
      auto alnum = [&](char32_t c) { return alpha(c) || (c >= '0' && c <= '9'); };
      if (!alpha(peek())) fail("malformed language tag");
      while (alpha(peek())) tag += static_cast<char>(cps_[pos_++]);
      while (peek() == '-') {
        tag += static_cast<char>(cps_[pos_++]);
        if (!alnum(peek())) fail("malformed language tag");
        while (alnum(peek())) tag += static_cast<char>(cps_[pos_++]);
      }
      return "\"" + lex + "\"@" + tag;
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      return "\"" + lex + "\"^^" + iri();
    }
    return "\"" + lex + "\"^^<" + std::string(kXsd) + "string>";
  }

  // [17] String and [22]-[25] quoted forms, with [26] UCHAR and [159s] ECHAR.
  std::string string_literal() {
    const char32_t q = cps_[pos_];
    const bool long_form = peek(1) == q && peek(2) == q;
    pos_ += long_form ? 3 : 1;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string");
      const char32_t c = cps_[pos_];
      if (c == q) {
        if (!long_form) {
          ++pos_;
          return out;
        }
        if (peek(1) == q && peek(2) == q) {
          // The closing delimiter is the last three quotes of a run.
          if (peek(3) == q) {
            put_utf8(out, c);
            ++pos_;
            continue;
          }
          pos_ += 3;
          return out;
        }
        put_utf8(out, c);
        ++pos_;
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("line break in short string");
      if (c == '\\') {
        ++pos_;
        const char32_t e = peek();
        switch (e) {
          case 't': out += '\t'; break;
          case 'b': out += '\b'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u':
          case 'U': {
            ++pos_;
            put_utf8(out, hex_escape(e == 'u' ? 4 : 8));
            continue;
          }
          default: fail("invalid escape in string");
        }
        ++pos_;
        continue;
      }
      put_utf8(out, c);
      ++pos_;
    }
  }

  char32_t hex_escape(int digits) {
    char32_t v = 0;
    for (int i = 0; i < digits; ++i) {
      const char32_t h = peek();
      if (!is_hex(h)) fail("invalid \\u escape");
      v = v * 16 + static_cast<char32_t>(h <= '9' ? h - '0' : (h | 0x20) - 'a' + 10);
      ++pos_;
    }
    return v;
  }

  // [135s] iri ::= IRIREF | PrefixedName
  std::string iri() {
    if (peek() == '<') return "<" + resolve(iriref()) + ">";
    return prefixed_name();
  }

  // [18] IRIREF ::= '<' ([^#x00-#x20<>"{}|^`\] | UCHAR)* '>'
  std::string iriref() {
    expect('<');
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      const char32_t c = cps_[pos_];
      if (c == '>') {
        ++pos_;
        return out;
      }
      if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
        fail("illegal character in IRI");
      }
      if (c == '\\') {
        ++pos_;
        const char32_t e = peek();
        if (e != 'u' && e != 'U') fail("invalid escape in IRI");
        ++pos_;
        put_utf8(out, hex_escape(e == 'u' ? 4 : 8));
        continue;
      }
      put_utf8(out, c);
      ++pos_;
    }
  }

  std::string resolve(const std::string& iri) const {
    // Absolute IRIs carry a scheme; everything this checker meets in tests
    // is absolute, relative references are joined naively to the base.
    const auto colon = iri.find(':');
    if (colon != std::string::npos && colon > 0) return iri;
    return base_ + iri;
  }

  // [139s] PNAME_NS ::= PN_PREFIX? ':'
  std::string pname_ns() {
    std::string prefix = pn_prefix();
    expect(':');
    return prefix;
  }

  // [167s] PN_PREFIX ::= PN_CHARS_BASE ((PN_CHARS | '.')* PN_CHARS)?
  std::string pn_prefix() {
    std::string out;
    if (!pn_chars_base(peek())) return out;
    put_utf8(out, cps_[pos_++]);
    std::size_t last_good = pos_;
    std::string good = out;
    while (pn_chars(peek()) || peek() == '.') {
      const char32_t c = cps_[pos_++];
      put_utf8(out, c);
      if (c != '.') {
        last_good = pos_;
        good = out;
      }
    }
    pos_ = last_good;
    return good;
  }

  // [136s] PrefixedName ::= PNAME_LN | PNAME_NS
  std::string prefixed_name() {
    const std::size_t start = pos_;
    std::string prefix = pn_prefix();
    if (peek() != ':') {
      pos_ = start;
      fail("expected IRI or prefixed name");
    }
    ++pos_;
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + ":'");
    return "<" + it->second + pn_local() + ">";
  }

  // [168s] PN_LOCAL ::= (PN_CHARS_U | ':' | [0-9] | PLX) ((PN_CHARS | '.' | ':' | PLX)* (PN_CHARS | ':' | PLX))?
  std::string pn_local() {
    std::string out;
    auto plx = [&](std::string& dst) -> bool {
      if (peek() == '%') {
        if (!is_hex(peek(1)) || !is_hex(peek(2))) fail("malformed percent escape");
        for (int i = 0; i < 3; ++i) put_utf8(dst, cps_[pos_++]);
        return true;
      }
      if (peek() == '\\') {
        constexpr std::u32string_view kEscapable = U"_~.-!$&'()*+,;=/?#@%";
        if (kEscapable.find(peek(1)) == std::u32string_view::npos) fail("invalid local name escape");
        ++pos_;
        put_utf8(dst, cps_[pos_++]);
        return true;
      }
      return false;
    };
    const char32_t first = peek();
    if (pn_chars_u(first) || first == ':' || (first >= '0' && first <= '9')) {
      put_utf8(out, cps_[pos_++]);
    } else if (!plx(out)) {
      return out;  // PNAME_NS alone
    }
    std::size_t last_good = pos_;
    std::string good = out;
    while (true) {
      const char32_t c = peek();
      if (pn_chars(c) || c == ':') {
        put_utf8(out, cps_[pos_++]);
        last_good = pos_;
        good = out;
      } else if (c == '.') {
        put_utf8(out, cps_[pos_++]);
      } else if (plx(out)) {
        last_good = pos_;
        good = out;
      } else {
        break;
      }
    }
    pos_ = last_good;
    return good;
  }

  // [137s] BlankNode ::= BLANK_NODE_LABEL | ANON
  std::string blank_node() {
    if (peek() == '[') {
      ++pos_;
      skip_ws();
      expect(']');
      return fresh_blank();
    }
    expect('_');
    expect(':');
    std::string label;
    const char32_t first = peek();
    if (!(pn_chars_u(first) || (first >= '0' && first <= '9'))) fail("malformed blank node label");
    put_utf8(label, cps_[pos_++]);
    std::size_t last_good = pos_;
    std::string good = label;
    while (pn_chars(peek()) || peek() == '.') {
      const char32_t c = cps_[pos_++];
      put_utf8(label, c);
      if (c != '.') {
        last_good = pos_;
        good = label;
      }
    }
    pos_ = last_good;
    return "_:" + good;
  }

  std::string fresh_blank() { return "_:gen" + std::to_string(++blank_counter_); }

  void skip_ws() {
    while (!at_end()) {
      const char32_t c = cps_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && cps_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool lookahead_keyword(std::string_view kw, bool case_sensitive) const {
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char32_t c = peek(i);
      char32_t k = static_cast<unsigned char>(kw[i]);
      if (!case_sensitive && c >= 'a' && c <= 'z') c -= 32;
      if (c != k) return false;
    }
    const char32_t after = peek(kw.size());
    const bool space = after == ' ' || after == '\t' || after == '\n' || after == '\r';
    // "@prefix:" still reads as the directive followed by the empty prefix.
    return space || (case_sensitive && after == ':');
  }

  bool lookahead_word(std::string_view w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (peek(i) != static_cast<unsigned char>(w[i])) return false;
    }
    const char32_t after = peek(w.size());
    return !(pn_chars(after) || after == ':' || (after == '.' && pn_chars(peek(w.size() + 1))));
  }

  char32_t peek(std::size_t ahead = 0) const {
    return pos_ + ahead < cps_.size() ? cps_[pos_ + ahead] : 0;
  }
  bool at_end() const { return pos_ >= cps_.size(); }

  void expect(char32_t c) {
    if (peek() != c) {
      std::string want;
      put_utf8(want, c);
      fail("expected '" + want + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Failure("line " + std::to_string(lines_[std::min(pos_, lines_.size() - 1)]) + ": " + message);
  }

  std::u32string cps_;
  std::vector<int> lines_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  std::string base_;
  std::vector<Triple> triples_;
  int blank_counter_ = 0;
};

}  // namespace

TurtleResult check_turtle(std::string_view text) {
  try {
    Parser parser(text);
    return parser.run();
  } catch (const Failure& f) {
    TurtleResult r;
    r.errors.push_back(f.what());
    return r;
  }
}

}  // namespace ontoforge::testing
