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

// Prompt rendering for the two model tasks: generic frame classification and
// war/peace indicator extraction.

#ifndef FRAMESCOPE_PROMPTS_H_
#define FRAMESCOPE_PROMPTS_H_

#include <map>
#include <string>
#include <string_view>

#include "framescope/corpus.h"
#include "framescope/taxonomy.h"

namespace framescope {

struct ChatRequest {
  std::string model;
  std::string system_text;
  std::string user_text;
  double temperature = 0.0;
  int max_output_tokens = 1024;
  // Set when the article body was cut to fit max_input_tokens.
  bool truncated = false;

  // Throws std::invalid_argument when user_text is empty or the temperature
  // is negative.
  void Validate() const;
};

struct PromptOptions {
  std::string model;
  double temperature = 0.0;
  int max_output_tokens = 1024;
  // Body tokens kept in the prompt; 0 disables truncation.
  size_t max_input_tokens = 3000;
};

// Python str.format style: "{name}" is substituted, "{{" and "}}" are
// literal braces. Values are inserted verbatim and never re-scanned, so
// braces inside article text cannot disturb the template. Throws
// std::invalid_argument on unknown or unterminated placeholders.
std::string RenderTemplate(std::string_view tmpl,
                           const std::map<std::string, std::string> &values);

// "Label - description," lines in inventory order, headed as in the
// classification prompt.
std::string RenderFrameList(const GenericInventory &inventory);

// The JSON answer scaffold for the indicator prompt, generated from the
// taxonomy: nesting follows the dotted paths, leaves show the tuple shape
// (instances, target, reasoning) that each kind expects.
std::string RenderIndicatorScaffold(const IndicatorInventory &inventory);

// Both throw std::invalid_argument if the article body is empty.
ChatRequest RenderGenericPrompt(const Article &article,
                                const GenericInventory &inventory,
                                const PromptOptions &options);
ChatRequest RenderIndicatorPrompt(const Article &article,
                                  const IndicatorInventory &inventory,
                                  const PromptOptions &options);

// Cuts `body` after its `max_tokens`-th word token. Returns the body
// unchanged when it is short enough or max_tokens is 0.
std::string TruncateToTokens(std::string_view body, size_t max_tokens,
                             bool *truncated);

}  // namespace framescope

#endif  // FRAMESCOPE_PROMPTS_H_
