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

#include "framescope/prompts.h"

#include <stdexcept>
#include <vector>

#include "framescope/text.h"

namespace framescope {

namespace {

constexpr std::string_view kGenericSystem =
    "You are an intelligent and logical journalism scholar conducting "
    "analysis of news articles. Your task is to read the article and answer "
    "the following question about the article. Only output the json and no "
    "other text.\n";

constexpr std::string_view kGenericTemplate = R"(
{frames}
Given the list of news frames, and the news article.
Your task is to carefully analyse the article and choose the appropriate frames used in the article from the above list.
Output your answer in a json format with the format:
{{"frames-list": "[<All frame names that apply from list provided above>], "reason": "<reasoning for the frames chosen>"}}.
Only choose the frames from the provided list of frames. If none of the frames apply, output "None" as the answer.
Article: {article}
)";

constexpr std::string_view kIndicatorSystem =
    "You are a helpful AI assistant.\n";

constexpr std::string_view kIndicatorTemplate = R"(
Given an article as input your task is to analyse it along the framework for Galtung's War and Peace journalism framework.

You have to assess the framing of the article, and come up with salient indicators supporting war or peace journalism frames, according to the framework.
Indicators include attribution of blame, partisan framing, the reporting being elite oriented vs people-oriented, or the language of the article being victimizing, demonizing or dehumanizing a certain group.
List the indicators found and provide exact phrasing of each indicator from the article. Identify the targets of the indicator, and give an associated reasoning.

Structure your output in a json format, with each indicator as key and the corresponding wording of that indicator, targets, and associated reasoning in the article text as the values in a list format.
```json

{scaffold}
Article: {article}
)";

// Scaffold node: either an object of children or a leaf kind.
struct ScaffoldNode {
  std::string key;
  const IndicatorKind *kind = nullptr;
  std::vector<ScaffoldNode> children;

  ScaffoldNode &Child(const std::string &name) {
    for (auto &c : children) {
      if (c.key == name) return c;
    }
    ScaffoldNode node;
    node.key = name;
    children.push_back(std::move(node));
    return children.back();
  }
};

std::string LeafShape(const IndicatorKind &kind) {
  const std::string instances = "<List of instances from the article>";
  if (!kind.has_target && !kind.has_reasoning) return "[" + instances + "]";
  std::string tuple = "[(" + instances;
  if (kind.has_target) tuple += ", <target>";
  if (kind.has_reasoning) tuple += ", <reasoning>";
  return tuple + ")]";
}

void RenderNode(const ScaffoldNode &node, int depth, std::string *out) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  *out += pad + "\"" + node.key + "\": ";
  if (node.kind) {
    *out += LeafShape(*node.kind);
    return;
  }
  *out += "{\n";
  for (size_t i = 0; i < node.children.size(); ++i) {
    RenderNode(node.children[i], depth + 1, out);
    if (i + 1 < node.children.size()) *out += ',';
    *out += '\n';
  }
  *out += pad + "}";
}

std::vector<std::string> SplitPath(const std::string &path) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t dot = path.find('.', start);
    parts.push_back(path.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return parts;
}

}  // namespace

void ChatRequest::Validate() const {
  if (user_text.empty()) throw std::invalid_argument("empty user_text");
  if (temperature < 0) throw std::invalid_argument("negative temperature");
}

std::string RenderTemplate(std::string_view tmpl,
                           const std::map<std::string, std::string> &values) {
  std::string out;
  out.reserve(tmpl.size());
  for (size_t i = 0; i < tmpl.size(); ++i) {
    const char c = tmpl[i];
    if (c == '{' && i + 1 < tmpl.size() && tmpl[i + 1] == '{') {
      out.push_back('{');
      ++i;
    } else if (c == '}' && i + 1 < tmpl.size() && tmpl[i + 1] == '}') {
      out.push_back('}');
      ++i;
    } else if (c == '{') {
      const size_t close = tmpl.find('}', i);
      if (close == std::string_view::npos) {
        throw std::invalid_argument("unterminated placeholder");
      }
      const std::string name(tmpl.substr(i + 1, close - i - 1));
      auto it = values.find(name);
      if (it == values.end()) {
        throw std::invalid_argument("unknown placeholder {" + name + "}");
      }
      out += it->second;
      i = close;
    } else if (c == '}') {
      throw std::invalid_argument("single '}' in template");
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string RenderFrameList(const GenericInventory &inventory) {
  std::string out =
      "A list of frame names and their descriptions used in news is:\n";
  const auto &frames = inventory.frames();
  for (size_t i = 0; i < frames.size(); ++i) {
    out += frames[i].label + " - " + frames[i].description;
    if (i + 1 < frames.size()) out += ',';
    out += '\n';
  }
  return out;
}

std::string RenderIndicatorScaffold(const IndicatorInventory &inventory) {
  ScaffoldNode root;
  for (const auto &kind : inventory.kinds()) {
    auto parts = SplitPath(kind.path);
    ScaffoldNode *node =
        &root.Child(std::string(ScaffoldRootKey(kind.polarity)));
    for (size_t i = 1; i < parts.size(); ++i) node = &node->Child(parts[i]);
    node->kind = &kind;
  }
  std::string out = "{\n";
  for (size_t i = 0; i < root.children.size(); ++i) {
    RenderNode(root.children[i], 1, &out);
    if (i + 1 < root.children.size()) out += ',';
    out += '\n';
  }
  out += "}";
  return out;
}

std::string TruncateToTokens(std::string_view body, size_t max_tokens,
                             bool *truncated) {
  *truncated = false;
  if (max_tokens == 0) return std::string(body);
  const auto tokens = TokenizeSpans(body);
  if (tokens.size() <= max_tokens) return std::string(body);
  *truncated = true;
  return std::string(body.substr(0, tokens[max_tokens - 1].end));
}

namespace {

ChatRequest Base(const Article &article, const PromptOptions &options,
                 std::string *body) {
  if (article.body.empty()) {
    throw std::invalid_argument("article " + article.id + " has an empty body");
  }
  ChatRequest req;
  req.model = options.model;
  req.temperature = options.temperature;
  req.max_output_tokens = options.max_output_tokens;
  *body = TruncateToTokens(article.body, options.max_input_tokens,
                           &req.truncated);
  return req;
}

}  // namespace

ChatRequest RenderGenericPrompt(const Article &article,
                                const GenericInventory &inventory,
                                const PromptOptions &options) {
  std::string body;
  ChatRequest req = Base(article, options, &body);
  req.system_text = std::string(kGenericSystem);
  req.user_text = RenderTemplate(
      kGenericTemplate,
      {{"frames", RenderFrameList(inventory)}, {"article", body}});
  return req;
}

ChatRequest RenderIndicatorPrompt(const Article &article,
                                  const IndicatorInventory &inventory,
                                  const PromptOptions &options) {
  std::string body;
  ChatRequest req = Base(article, options, &body);
  req.system_text = std::string(kIndicatorSystem);
  req.user_text = RenderTemplate(
      kIndicatorTemplate,
      {{"scaffold", RenderIndicatorScaffold(inventory)}, {"article", body}});
  return req;
}

}  // namespace framescope
