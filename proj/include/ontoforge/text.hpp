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

#ifndef ONTOFORGE_TEXT_HPP_
#define ONTOFORGE_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::text {

// Decodes UTF-8 into code points. Malformed sequences decode to U+FFFD,
// one replacement per offending byte.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view cps);
void append_utf8(std::string& out, char32_t cp);

// Simple case folding for ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic (Russian and Ukrainian). Sufficient for exact term matching.
char32_t fold(char32_t cp);
std::u32string fold(std::u32string_view cps);

bool is_upper(char32_t cp);
bool is_letter(char32_t cp);
bool is_word_char(char32_t cp);
bool is_cyrillic(char32_t cp);

std::string_view trim(std::string_view s);

// Stable identifier derived from a human-readable name: lowercased, Cyrillic
// transliterated, whitespace and hyphen runs collapsed to one '-', other
// punctuation dropped. Letters outside the transliteration table become
// "u<hex>". May return an empty string for names without word characters.
std::string slugify(std::string_view name);

// Splits on runs of non-word characters.
std::vector<std::u32string> words(std::u32string_view cps);

bool strip_bom(std::string& s);

}  // namespace ontoforge::text

#endif  // ONTOFORGE_TEXT_HPP_
