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

#include "framescope/responses.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "framescope/text.h"

namespace framescope {

namespace {

// Returns the index one past the '}' closing the object that opens at
// `start`, or npos when the braces never balance.
size_t MatchObject(std::string_view text, size_t start) {
  int depth = 0;
  bool in_string = false;
  for (size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i + 1;
    }
  }
  return std::string_view::npos;
}

// Tuple parentheses become brackets and trailing commas are dropped, both
// only outside string literals.
std::string Repair(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      out.push_back(c);
      if (c == '\\' && i + 1 < text.size()) {
        out.push_back(text[++i]);
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_string = true;
        out.push_back(c);
        break;
      case '(':
        out.push_back('[');
        break;
      case ')':
        out.push_back(']');
        break;
      case ',': {
        size_t j = i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && (text[j] == '}' || text[j] == ']')) break;
        out.push_back(c);
        break;
      }
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::optional<json> FirstObject(std::string_view text) {
  for (size_t start = text.find('{'); start != std::string_view::npos;
       start = text.find('{', start + 1)) {
    const size_t end = MatchObject(text, start);
    if (end == std::string_view::npos) continue;
    const std::string_view candidate = text.substr(start, end - start);
    json doc = json::parse(candidate, nullptr, false);
    if (doc.is_discarded()) {
      doc = json::parse(Repair(candidate), nullptr, false);
    }
    if (!doc.is_discarded() && doc.is_object()) return doc;
  }
  return std::nullopt;
}

std::vector<std::string_view> FencedBlocks(std::string_view raw) {
  std::vector<std::string_view> blocks;
  size_t pos = 0;
  while (true) {
    const size_t open = raw.find("```", pos);
    if (open == std::string_view::npos) break;
    size_t content = raw.find('\n', open);
    if (content == std::string_view::npos) break;
    ++content;
    const size_t close = raw.find("```", content);
    if (close == std::string_view::npos) {
      blocks.push_back(raw.substr(content));
      break;
    }
    blocks.push_back(raw.substr(content, close - content));
    pos = close + 3;
  }
  return blocks;
}

std::string StripQuotes(std::string_view s) {
  std::string out = Trim(s);
  while (out.size() >= 1 && (out.front() == '"' || out.front() == '\'')) {
    out.erase(0, 1);
  }
  while (!out.empty() && (out.back() == '"' || out.back() == '\'')) {
    out.pop_back();
  }
  return Trim(out);
}

// Splits "Political, Legality, constitutionality and jurisprudence" into
// labels, joining comma pieces when that yields a known label.
std::vector<std::string> SegmentLabelString(std::string_view text,
                                            const GenericInventory &inventory) {
  std::string s = Trim(text);
  if (!s.empty() && s.front() == '[') s.erase(0, 1);
  if (!s.empty() && s.back() == ']') s.pop_back();
  std::vector<std::string> pieces;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    pieces.push_back(StripQuotes(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::vector<std::string> labels;
  for (size_t i = 0; i < pieces.size();) {
    size_t best = 0;
    for (size_t j = pieces.size(); j > i; --j) {
      std::string joined = pieces[i];
      for (size_t k = i + 1; k < j; ++k) joined += ", " + pieces[k];
      if (inventory.FindByLabel(joined)) {
        best = j;
        labels.push_back(joined);
        break;
      }
    }
    if (best == 0) {
      if (!pieces[i].empty()) labels.push_back(pieces[i]);
      ++i;
    } else {
      i = best;
    }
  }
  return labels;
}

const json *FindKey(const json &obj, std::initializer_list<const char *> keys) {
  if (!obj.is_object()) return nullptr;
  for (const char *k : keys) {
    auto it = obj.find(k);
    if (it != obj.end()) return &*it;
  }
  return nullptr;
}

}  // namespace

std::optional<json> RecoverJsonObject(std::string_view raw) {
  for (auto block : FencedBlocks(raw)) {
    if (auto doc = FirstObject(block)) return doc;
  }
  return FirstObject(raw);
}

json AssignmentToJson(const GenericFrameAssignment &a) {
  return json{{"article_id", a.article_id},
              {"frames", a.frames},
              {"reason", a.reason},
              {"raw_response", a.raw_response},
              {"valid", a.valid}};
}

GenericFrameAssignment AssignmentFromJson(const json &r) {
  GenericFrameAssignment a;
  a.article_id = r.at("article_id").get<std::string>();
  a.frames = r.at("frames").get<std::vector<std::string>>();
  a.reason = r.value("reason", "");
  a.raw_response = r.value("raw_response", "");
  a.valid = r.value("valid", false);
  return a;
}

GenericFrameAssignment ParseGenericResponse(
    std::string_view raw, std::string_view article_id,
    const GenericInventory &inventory) {
  GenericFrameAssignment a;
  a.article_id = std::string(article_id);
  a.raw_response = std::string(raw);
  a.frames = {std::string(kNoneLabel)};

  auto doc = RecoverJsonObject(raw);
  if (!doc) return a;
  if (const json *reason = FindKey(*doc, {"reason", "reasoning"});
      reason && reason->is_string()) {
    a.reason = reason->get<std::string>();
  }
  const json *list = FindKey(*doc, {"frames-list", "frames_list", "frames"});
  if (!list) return a;

  std::vector<std::string> candidates;
  if (list->is_array()) {
    for (const auto &item : *list) {
      if (item.is_string()) {
        candidates.push_back(item.get<std::string>());
      } else {
        ++a.unknown_labels;
      }
    }
  } else if (list->is_string()) {
    json inner = json::parse(list->get<std::string>(), nullptr, false);
    if (!inner.is_discarded() && inner.is_array() &&
        std::all_of(inner.begin(), inner.end(),
                    [](const json &x) { return x.is_string(); })) {
      candidates = inner.get<std::vector<std::string>>();
    } else {
      candidates = SegmentLabelString(list->get<std::string>(), inventory);
    }
  } else {
    ++a.unknown_labels;
  }

  std::set<std::string> chosen;
  for (const auto &c : candidates) {
    const GenericFrame *f = inventory.FindByLabel(StripQuotes(c));
    if (f) {
      chosen.insert(f->label);
    } else {
      ++a.unknown_labels;
    }
  }
  if (chosen.empty()) return a;
  a.valid = true;
  // "None" alongside real frames carries no information.
  if (chosen.size() > 1) chosen.erase(std::string(kNoneLabel));
  a.frames.clear();
  for (const auto &f : inventory.frames()) {
    if (chosen.count(f.label)) a.frames.push_back(f.label);
  }
  return a;
}

json InstanceToJson(const IndicatorInstance &i) {
  json span = nullptr;
  if (i.char_span) span = json::array({i.char_span->first, i.char_span->second});
  return json{{"article_id", i.article_id},
              {"kind_path", i.kind_path},
              {"excerpt", i.excerpt},
              {"target", i.target ? json(*i.target) : json(nullptr)},
              {"reasoning", i.reasoning ? json(*i.reasoning) : json(nullptr)},
              {"grounded", i.grounded},
              {"char_span", span}};
}

IndicatorInstance InstanceFromJson(const json &r) {
  IndicatorInstance i;
  i.article_id = r.at("article_id").get<std::string>();
  i.kind_path = r.at("kind_path").get<std::string>();
  i.excerpt = r.at("excerpt").get<std::string>();
  if (r.contains("target") && r.at("target").is_string()) {
    i.target = r.at("target").get<std::string>();
  }
  if (r.contains("reasoning") && r.at("reasoning").is_string()) {
    i.reasoning = r.at("reasoning").get<std::string>();
  }
  i.grounded = r.value("grounded", false);
  if (r.contains("char_span") && r.at("char_span").is_array()) {
    const auto &s = r.at("char_span");
    i.char_span = CharSpan{s.at(0).get<size_t>(), s.at(1).get<size_t>()};
  }
  return i;
}

namespace {

std::optional<std::string> OptionalText(const json *value) {
  if (!value || !value->is_string()) return std::nullopt;
  std::string s = Trim(value->get<std::string>());
  if (s.empty()) return std::nullopt;
  return s;
}

// Collects excerpt strings from the first tuple position, which the
// scaffold describes as a list of instances.
bool CollectExcerpts(const json &value, std::vector<std::string> *out) {
  if (value.is_string()) {
    out->push_back(value.get<std::string>());
    return true;
  }
  if (value.is_array() && !value.empty() &&
      std::all_of(value.begin(), value.end(),
                  [](const json &x) { return x.is_string(); })) {
    for (const auto &x : value) out->push_back(x.get<std::string>());
    return true;
  }
  return false;
}

// A single (instances, target[, reasoning]) tuple written without the
// enclosing list, e.g. ["called them animals", "Hamas", "metaphor"].
bool IsBareTuple(const json &node) {
  if (node.size() < 2 || node.size() > 3) return false;
  std::vector<std::string> ignored;
  if (!CollectExcerpts(node.at(0), &ignored)) return false;
  for (size_t i = 1; i < node.size(); ++i) {
    if (!node.at(i).is_string() && !node.at(i).is_null()) return false;
  }
  return true;
}

void WalkUnknown(const json &node, const std::string &prefix,
                 const IndicatorInventory &inventory,
                 std::vector<std::string> *unknown) {
  for (const auto &[key, value] : node.items()) {
    const std::string path = prefix + "." + key;
    if (inventory.Find(path)) continue;
    if (value.is_object()) {
      WalkUnknown(value, path, inventory, unknown);
    } else {
      unknown->push_back(path);
    }
  }
}

}  // namespace

IndicatorParse ParseIndicatorResponse(std::string_view raw,
                                      const Article &article,
                                      const IndicatorInventory &inventory) {
  IndicatorParse result;
  auto doc = RecoverJsonObject(raw);
  if (!doc) {
    result.failed = true;
    result.failure = "no JSON object could be recovered";
    return result;
  }
  auto root_of = [&](Polarity p) -> const json * {
    if (p == Polarity::kWar) {
      return FindKey(*doc, {"war_journalism_indicators",
                            "war_journalism_indicator"});
    }
    return FindKey(*doc, {"peace_journalism_indicator",
                          "peace_journalism_indicators"});
  };
  const json *war_root = root_of(Polarity::kWar);
  const json *peace_root = root_of(Polarity::kPeace);
  if (!war_root && !peace_root) {
    result.failed = true;
    result.failure = "response has no indicator sections";
    return result;
  }
  if (war_root && war_root->is_object()) {
    WalkUnknown(*war_root, "war", inventory, &result.unknown_kinds);
  }
  if (peace_root && peace_root->is_object()) {
    WalkUnknown(*peace_root, "peace", inventory, &result.unknown_kinds);
  }

  for (const auto &kind : inventory.kinds()) {
    const json *node = root_of(kind.polarity);
    size_t start = kind.path.find('.') + 1;
    while (node && start != 0) {
      const size_t dot = kind.path.find('.', start);
      const std::string key = kind.path.substr(start, dot - start);
      if (!node->is_object() || !node->contains(key)) {
        node = nullptr;
        break;
      }
      node = &node->at(key);
      start = dot == std::string::npos ? 0 : dot + 1;
    }
    if (!node || node->is_null()) continue;

    size_t &malformed = result.malformed_by_kind[kind.path];
    auto emit = [&](const std::string &excerpt,
                    std::optional<std::string> target,
                    std::optional<std::string> reasoning) {
      const std::string trimmed = Trim(excerpt);
      if (trimmed.empty()) {
        ++malformed;
        return;
      }
      IndicatorInstance inst;
      inst.article_id = article.id;
      inst.kind_path = kind.path;
      inst.excerpt = trimmed;
      if (kind.has_target) inst.target = std::move(target);
      if (kind.has_reasoning) inst.reasoning = std::move(reasoning);
      const GroundingResult g = GroundExcerpt(inst.excerpt, article.body);
      inst.grounded = g.grounded;
      inst.char_span = g.span;
      result.instances.push_back(std::move(inst));
    };

    const bool tuple_kind = kind.has_target || kind.has_reasoning;
    json entries = node->is_array() && !(tuple_kind && IsBareTuple(*node))
                       ? *node
                       : json::array({*node});
    for (const auto &entry : entries) {
      std::vector<std::string> excerpts;
      if (entry.is_string()) {
        emit(entry.get<std::string>(), std::nullopt, std::nullopt);
      } else if (entry.is_array() && !tuple_kind) {
        if (!CollectExcerpts(entry, &excerpts)) {
          ++malformed;
          continue;
        }
        for (const auto &e : excerpts) emit(e, std::nullopt, std::nullopt);
      } else if (entry.is_array()) {
        if (entry.empty() || entry.size() > 3 ||
            !CollectExcerpts(entry.at(0), &excerpts)) {
          ++malformed;
          continue;
        }
        const auto target = entry.size() > 1 ? OptionalText(&entry.at(1))
                                             : std::nullopt;
        const auto reasoning = entry.size() > 2 ? OptionalText(&entry.at(2))
                                                : std::nullopt;
        for (const auto &e : excerpts) emit(e, target, reasoning);
      } else if (entry.is_object()) {
        const json *text = FindKey(entry, {"instance", "instances", "excerpt",
                                           "text"});
        if (!text || !CollectExcerpts(*text, &excerpts)) {
          ++malformed;
          continue;
        }
        const auto target = OptionalText(FindKey(entry, {"target"}));
        const auto reasoning =
            OptionalText(FindKey(entry, {"reasoning", "reason"}));
        for (const auto &e : excerpts) emit(e, target, reasoning);
      } else {
        ++malformed;
      }
    }
    if (malformed == 0) result.malformed_by_kind.erase(kind.path);
  }
  return result;
}

}  // namespace framescope
