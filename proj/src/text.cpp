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

#include "ontoforge/text.hpp"

#include <array>
#include <cstdint>
#include <cstdio>

namespace ontoforge::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Lowercase Russian/Ukrainian letters U+0430..U+044F.
constexpr std::array<const char*, 32> kCyrillicLower = {
    "a", "b", "v",  "g",  "d", "e",    "zh", "z", "i", "y",  "k",
    "l", "m", "n",  "o",  "p", "r",    "s",  "t", "u", "f",  "kh",
    "c", "ch", "sh", "shch", "", "y", "",   "e", "yu", "ya"};

const char* transliterate_extra(char32_t cp) {
  switch (cp) {
    case 0x0451: return "e";   // ё
    case 0x0454: return "ye";  // є
    case 0x0456: return "i";   // і
    case 0x0457: return "yi";  // ї
    case 0x0491: return "g";   // ґ
    default: return nullptr;
  }
}

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto b0 = static_cast<unsigned char>(utf8[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > utf8.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(utf8[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

char32_t fold(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp < 0x80) return cp;
  if ((cp >= 0x00C0 && cp <= 0x00DE) && cp != 0x00D7) return cp + 32;
  if (cp == 0x0178) return 0x00FF;
  if (cp >= 0x0100 && cp <= 0x017F && cp != 0x0130 && cp != 0x0131 &&
      cp != 0x0138 && cp != 0x0149 && cp != 0x017F) {
    // Latin Extended-A alternates upper/lower, with a phase shift in the
    // U+0139..U+0148 and U+0179..U+017E runs.
    const bool odd_phase = (cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E);
    const bool upper = odd_phase ? (cp % 2 == 1) : (cp % 2 == 0);
    return upper ? cp + 1 : cp;
  }
  if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2) return cp + 32;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 32;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 80;
  if (cp >= 0x0460 && cp <= 0x04FF && cp % 2 == 0 && !(cp >= 0x0482 && cp <= 0x0489)) {
    if (cp >= 0x04C1 && cp <= 0x04CE) return cp;  // odd-phase run, rare
    return cp + 1;
  }
  return cp;
}

std::u32string fold(std::u32string_view cps) {
  std::u32string out(cps);
  for (auto& cp : out) cp = fold(cp);
  return out;
}

bool is_upper(char32_t cp) { return is_letter(cp) && fold(cp) != cp; }

bool is_cyrillic(char32_t cp) { return cp >= 0x0400 && cp <= 0x052F; }

bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0x00C0 && cp <= 0x024F) return cp != 0x00D7 && cp != 0x00F7;
  if (cp >= 0x0370 && cp <= 0x03FF) return true;
  return is_cyrillic(cp) && !(cp >= 0x0482 && cp <= 0x0489);
}

bool is_word_char(char32_t cp) {
  return is_letter(cp) || (cp >= '0' && cp <= '9') || cp == '_';
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

std::string slugify(std::string_view name) {
  std::string out;
  bool pending_sep = false;
  for (char32_t cp : decode(trim(name))) {
    const char32_t lower = fold(cp);
    std::string piece;
    if ((lower >= 'a' && lower <= 'z') || (lower >= '0' && lower <= '9')) {
      piece.push_back(static_cast<char>(lower));
    } else if (lower >= 0x0430 && lower <= 0x044F) {
      piece = kCyrillicLower[lower - 0x0430];
      if (piece.empty()) continue;  // hard/soft signs vanish
    } else if (const char* extra = transliterate_extra(lower)) {
      piece = extra;
    } else if (is_letter(lower)) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "u%04x", static_cast<unsigned>(lower));
      piece = buf;
    } else if (cp == ' ' || cp == '\t' || cp == '-' || cp == '_' || cp == '\n' ||
               cp == 0x00A0 || cp == 0x2013 || cp == 0x2014 || cp == '/') {
      pending_sep = true;
      continue;
    } else {
      continue;
    }
    if (pending_sep && !out.empty()) out.push_back('-');
    pending_sep = false;
    out += piece;
  }
  return out;
}

std::vector<std::u32string> words(std::u32string_view cps) {
  std::vector<std::u32string> out;
  std::u32string cur;
  for (char32_t cp : cps) {
    if (is_word_char(cp)) {
      cur.push_back(cp);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool strip_bom(std::string& s) {
  if (s.size() >= 3 && s.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    s.erase(0, 3);
    return true;
  }
  return false;
}

}  // namespace ontoforge::text
