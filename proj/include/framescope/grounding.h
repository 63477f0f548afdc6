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

// Verifies that a model-quoted excerpt actually occurs in the article.
//
// Both sides are normalized the same way: case folding, typographic quotes
// mapped to ASCII, whitespace runs collapsed to one space. The excerpt also
// loses any surrounding quotes and ellipses. Matching is exact substring
// search on the normalized forms; there is no fuzzy matching.

#ifndef FRAMESCOPE_GROUNDING_H_
#define FRAMESCOPE_GROUNDING_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace framescope {

// Byte offsets [first, second) into the original body.
using CharSpan = std::pair<size_t, size_t>;

struct NormalizedText {
  std::string text;
  // For byte i of `text`, the original byte range of the code point (or
  // whitespace run) it came from.
  std::vector<size_t> source_begin;
  std::vector<size_t> source_end;
};

NormalizedText NormalizeForGrounding(std::string_view text);

// NormalizeForGrounding plus stripping of surrounding quotes and ellipses.
std::string NormalizeExcerpt(std::string_view excerpt);

struct GroundingResult {
  bool grounded = false;
  std::optional<CharSpan> span;
};

GroundingResult GroundExcerpt(std::string_view excerpt, std::string_view body);

}  // namespace framescope

#endif  // FRAMESCOPE_GROUNDING_H_
