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

#include "framescope/text.h"

#include <cstdio>

namespace framescope {

char32_t DecodeUtf8(std::string_view text, size_t pos, size_t *length) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  auto fail = [&]() {
    *length = 1;
    return char32_t{0xFFFD};
  };
  if (b0 < 0x80) {
    *length = 1;
    return b0;
  }
  int n;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    n = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    n = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    n = 4;
    cp = b0 & 0x07;
  } else {
    return fail();
  }
  if (pos + n > text.size()) return fail();
  for (int i = 1; i < n; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return fail();
    cp = (cp << 6) | (b & 0x3F);
  }
  *length = n;
  return cp;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsSpaceCodepoint(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsWordCodepoint(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  if (IsSpaceCodepoint(cp) || cp == 0xFFFD) return false;
  // Latin-1 punctuation and symbols, keeping the ordinal indicators and
  // micro sign.
  if (cp >= 0xA1 && cp <= 0xBF) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  // General punctuation, currency, letterlike arrows, box drawing, dingbats.
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return false;
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return false;
  return true;
}

char32_t FoldCodepoint(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

std::string CaseFold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    size_t len;
    const char32_t cp = DecodeUtf8(text, i, &len);
    if (cp == 0xFFFD && len == 1) {
      out.push_back(text[i]);
    } else {
      AppendUtf8(FoldCodepoint(cp), &out);
    }
    i += len;
  }
  return out;
}

namespace {

bool IsApostropheOrHyphen(char32_t cp) {
  return cp == '\'' || cp == 0x2019 || cp == '-';
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

}  // namespace

std::vector<TokenSpan> TokenizeSpans(std::string_view text) {
  std::vector<TokenSpan> tokens;
  size_t i = 0;
  while (i < text.size()) {
    size_t len;
    char32_t cp = DecodeUtf8(text, i, &len);
    if (!IsWordCodepoint(cp)) {
      i += len;
      continue;
    }
    const size_t begin = i;
    char32_t prev = cp;
    i += len;
    while (i < text.size()) {
      cp = DecodeUtf8(text, i, &len);
      if (IsWordCodepoint(cp)) {
        prev = cp;
        i += len;
        continue;
      }
      // A joiner only counts when a word code point follows it.
      if (i + len >= text.size()) break;
      size_t next_len;
      const char32_t next = DecodeUtf8(text, i + len, &next_len);
      const bool joins =
          (IsApostropheOrHyphen(cp) && IsWordCodepoint(next)) ||
          ((cp == '.' || cp == ',') && IsDigit(prev) && IsDigit(next));
      if (!joins) break;
      prev = next;
      i += len + next_len;
    }
    tokens.push_back({text.substr(begin, i - begin), begin, i});
  }
  return tokens;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (const auto &t : TokenizeSpans(text)) out.emplace_back(t.text);
  return out;
}

bool ContainsPhrase(std::string_view haystack, std::string_view phrase) {
  // Hyphens are word boundaries here: "Gaza-based" mentions Gaza.
  auto fold = [](std::string_view text) {
    std::string folded = CaseFold(text);
    for (char &c : folded) {
      if (c == '-') c = ' ';
    }
    return folded;
  };
  const std::string folded_hay = fold(haystack);
  const std::string folded_phrase = fold(phrase);
  const auto hay = TokenizeSpans(folded_hay);
  const auto needle = TokenizeSpans(folded_phrase);
  if (needle.empty() || needle.size() > hay.size()) return false;
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    size_t j = 0;
    while (j < needle.size() && hay[i + j].text == needle[j].text) ++j;
    if (j == needle.size()) return true;
  }
  return false;
}

std::string Trim(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && static_cast<unsigned char>(text[b]) <= ' ') ++b;
  while (e > b && static_cast<unsigned char>(text[e - 1]) <= ' ') --e;
  return std::string(text.substr(b, e - b));
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 0x20);
  }
  return out;
}

uint64_t Fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string HexDigest(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(data)));
  return buf;
}

}  // namespace framescope
