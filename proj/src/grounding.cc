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

#include "framescope/grounding.h"

#include "framescope/text.h"

namespace framescope {

namespace {

char32_t MapTypography(char32_t cp) {
  switch (cp) {
    case 0x2018: case 0x2019: case 0x201A: case 0x201B: case 0x2032:
      return '\'';
    case 0x201C: case 0x201D: case 0x201E: case 0x201F: case 0x2033:
    case 0x00AB: case 0x00BB:
      return '"';
    case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014:
      return '-';
    default:
      return cp;
  }
}

bool StripPrefix(std::string *s, std::string_view p) {
  if (s->compare(0, p.size(), p) != 0) return false;
  s->erase(0, p.size());
  return true;
}

bool StripSuffix(std::string *s, std::string_view p) {
  if (s->size() < p.size() ||
      s->compare(s->size() - p.size(), p.size(), p) != 0) {
    return false;
  }
  s->erase(s->size() - p.size());
  return true;
}

}  // namespace

NormalizedText NormalizeForGrounding(std::string_view text) {
  NormalizedText out;
  out.text.reserve(text.size());
  auto emit = [&](const std::string &bytes, size_t begin, size_t end) {
    for (char c : bytes) {
      out.text.push_back(c);
      out.source_begin.push_back(begin);
      out.source_end.push_back(end);
    }
  };
  for (size_t i = 0; i < text.size();) {
    size_t len;
    const char32_t cp = DecodeUtf8(text, i, &len);
    if (IsSpaceCodepoint(cp)) {
      if (!out.text.empty() && out.text.back() != ' ') {
        emit(" ", i, i + len);
      } else if (!out.text.empty()) {
        out.source_end.back() = i + len;
      }
      i += len;
      continue;
    }
    std::string bytes;
    if (cp == 0xFFFD && len == 1) {
      bytes.push_back(text[i]);
    } else {
      AppendUtf8(FoldCodepoint(MapTypography(cp)), &bytes);
    }
    emit(bytes, i, i + len);
    i += len;
  }
  if (!out.text.empty() && out.text.back() == ' ') {
    out.text.pop_back();
    out.source_begin.pop_back();
    out.source_end.pop_back();
  }
  return out;
}

std::string NormalizeExcerpt(std::string_view excerpt) {
  std::string s = NormalizeForGrounding(excerpt).text;
  static constexpr std::string_view kWrappers[] = {
      "[...]", "[…]", "...", "…", "\"", "'", " "};
  bool changed = true;
  while (changed && !s.empty()) {
    changed = false;
    for (auto w : kWrappers) {
      changed |= StripPrefix(&s, w);
      changed |= StripSuffix(&s, w);
    }
  }
  return s;
}

GroundingResult GroundExcerpt(std::string_view excerpt,
                              std::string_view body) {
  GroundingResult result;
  const std::string needle = NormalizeExcerpt(excerpt);
  if (needle.empty()) return result;
  const NormalizedText hay = NormalizeForGrounding(body);
  const size_t pos = hay.text.find(needle);
  if (pos == std::string::npos) return result;
  result.grounded = true;
  result.span = CharSpan{hay.source_begin[pos],
                         hay.source_end[pos + needle.size() - 1]};
  return result;
}

}  // namespace framescope
