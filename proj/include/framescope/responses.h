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

// Structured-output recovery for model responses. Parsing is total: any
// input string yields a result, with anomalies counted instead of thrown.

#ifndef FRAMESCOPE_RESPONSES_H_
#define FRAMESCOPE_RESPONSES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framescope/corpus.h"
#include "framescope/grounding.h"
#include "framescope/io.h"
#include "framescope/taxonomy.h"

namespace framescope {

// Finds the outermost JSON object in free-form model output: code fences and
// surrounding prose are ignored. Falls back to light repairs that models
// commonly need (Python tuples as lists, trailing commas) before giving up.
std::optional<json> RecoverJsonObject(std::string_view raw);

struct GenericFrameAssignment {
  std::string article_id;
  // Canonical labels in inventory order. {"None"} when nothing valid.
  std::vector<std::string> frames;
  std::string reason;
  std::string raw_response;
  bool valid = false;
  // Labels in the response that matched nothing in the inventory.
  size_t unknown_labels = 0;
};

json AssignmentToJson(const GenericFrameAssignment &a);
GenericFrameAssignment AssignmentFromJson(const json &record);

GenericFrameAssignment ParseGenericResponse(std::string_view raw,
                                            std::string_view article_id,
                                            const GenericInventory &inventory);

struct IndicatorInstance {
  std::string article_id;
  std::string kind_path;
  std::string excerpt;
  std::optional<std::string> target;
  std::optional<std::string> reasoning;
  bool grounded = false;
  std::optional<CharSpan> char_span;
};

json InstanceToJson(const IndicatorInstance &instance);
IndicatorInstance InstanceFromJson(const json &record);

struct IndicatorParse {
  std::vector<IndicatorInstance> instances;
  // Set when no usable JSON could be recovered at all.
  bool failed = false;
  std::string failure;
  // Entries of a known kind that had an unusable shape.
  std::map<std::string, size_t> malformed_by_kind;
  // Leaf keys in the response that are not in the inventory.
  std::vector<std::string> unknown_kinds;
};

IndicatorParse ParseIndicatorResponse(std::string_view raw,
                                      const Article &article,
                                      const IndicatorInventory &inventory);

}  // namespace framescope

#endif  // FRAMESCOPE_RESPONSES_H_
