// Copyright 2026 The Framescope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// UTF-8 text utilities shared by every stage: decoding, case folding,
// word segmentation and stable content hashing.

#ifndef FRAMESCOPE_TEXT_H_
#define FRAMESCOPE_TEXT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace framescope {

// A word token with byte offsets [begin, end) into the segmented text.
struct TokenSpan {
  std::string_view text;
  size_t begin = 0;
  size_t end = 0;
};

// Decodes the code point starting at text[pos]. Invalid sequences decode as
// U+FFFD with length 1, so iteration always makes progress.
char32_t DecodeUtf8(std::string_view text, size_t pos, size_t *length);

void AppendUtf8(char32_t cp, std::string *out);

bool IsSpaceCodepoint(char32_t cp);
bool IsWordCodepoint(char32_t cp);

// Simple one-to-one case folding for Latin, Greek and Cyrillic.
char32_t FoldCodepoint(char32_t cp);
std::string CaseFold(std::string_view text);

// Word segmentation. A token is a maximal run of word code points;
// apostrophes and hyphens join letters inside a word ("al-Shifa", "Israel's")
// and '.' or ',' join digits ("1,200", "3.5"). Standalone punctuation is not
// emitted.
std::vector<TokenSpan> TokenizeSpans(std::string_view text);
std::vector<std::string> Tokenize(std::string_view text);

// Whole-word, case-insensitive phrase containment over word tokens.
bool ContainsPhrase(std::string_view haystack, std::string_view phrase);

std::string Trim(std::string_view text);
std::string AsciiLower(std::string_view text);

// FNV-1a 64-bit; stable across platforms and runs.
uint64_t Fnv1a64(std::string_view data);
std::string HexDigest(std::string_view data);

}  // namespace framescope

#endif  // FRAMESCOPE_TEXT_H_
