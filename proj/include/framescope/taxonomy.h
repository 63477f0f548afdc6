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

// The three frame inventories: generic (MFC) frames, war/peace journalism
// indicator kinds, and the semantic frames of interest. All three are loaded
// from editable JSON files and validated against the canonical entries that
// the rest of the pipeline depends on; extra entries are allowed.

#ifndef FRAMESCOPE_TAXONOMY_H_
#define FRAMESCOPE_TAXONOMY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "framescope/io.h"

namespace framescope {

// Raised when a taxonomy file is incomplete or carries unknown keys.
class TaxonomyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kNoneLabel = "None";

struct GenericFrame {
  std::string label;
  std::string description;
  // Short MFC-style name used in metric tables ("cap&res", "crime", ...).
  std::string short_name;
  // Numeric MFC frame dimension code, 0 if none.
  int mfc_code = 0;
  std::vector<std::string> aliases;
};

// Case-fold and collapse internal whitespace; used for all label lookups.
std::string NormalizeLabel(std::string_view label);

class GenericInventory {
 public:
  GenericInventory() = default;
  explicit GenericInventory(std::vector<GenericFrame> frames);

  const std::vector<GenericFrame> &frames() const { return frames_; }
  std::vector<std::string> labels() const;
  // Labels scored by the evaluation harness: everything but "None" unless
  // `include_none`.
  std::vector<std::string> ScoredLabels(bool include_none) const;

  // Exact label match after NormalizeLabel.
  const GenericFrame *FindByLabel(std::string_view label) const;
  // Also accepts short names, aliases and MFC codes ("7", "7.0").
  const GenericFrame *FindByAnyName(std::string_view name) const;

 private:
  std::vector<GenericFrame> frames_;
  std::map<std::string, size_t> by_label_;
  std::map<std::string, size_t> by_any_;
};

enum class Polarity { kWar, kPeace };
std::string_view PolarityName(Polarity polarity);

struct IndicatorKind {
  // Dotted path; the first segment is the polarity ("war.language.passive").
  std::string path;
  Polarity polarity = Polarity::kWar;
  bool has_target = false;
  bool has_reasoning = false;
  std::string description;
};

class IndicatorInventory {
 public:
  IndicatorInventory() = default;
  explicit IndicatorInventory(std::vector<IndicatorKind> kinds);

  const std::vector<IndicatorKind> &kinds() const { return kinds_; }
  const IndicatorKind *Find(std::string_view path) const;
  // Throws std::out_of_range for an unknown path.
  Polarity PolarityOf(std::string_view path) const;

 private:
  std::vector<IndicatorKind> kinds_;
  std::map<std::string, size_t, std::less<>> by_path_;
};

// Key used for each polarity at the top level of the indicator prompt's JSON
// scaffold and of model responses.
std::string_view ScaffoldRootKey(Polarity polarity);

enum class EffectClass { kVisible, kInvisible, kOther };
std::string_view EffectClassName(EffectClass effect);
EffectClass ParseEffectClass(std::string_view text);

struct FrameOfInterest {
  std::string name;
  EffectClass effect_class = EffectClass::kOther;
  std::vector<std::string> roles_of_interest;
  std::string description;
  std::string note;

  bool HasRole(std::string_view role) const;
};

class FrameInventory {
 public:
  FrameInventory() = default;
  explicit FrameInventory(std::vector<FrameOfInterest> frames);

  const std::vector<FrameOfInterest> &frames() const { return frames_; }
  const FrameOfInterest *Find(std::string_view name) const;

 private:
  std::vector<FrameOfInterest> frames_;
  std::map<std::string, size_t, std::less<>> by_name_;
};

struct Taxonomies {
  GenericInventory generic;
  IndicatorInventory indicators;
  FrameInventory frames;
};

// Parsers for the individual files; each validates completeness against the
// canonical inventory and throws TaxonomyError naming every discrepancy.
GenericInventory GenericInventoryFromJson(const json &doc);
IndicatorInventory IndicatorInventoryFromJson(const json &doc);
FrameInventory FrameInventoryFromJson(const json &doc);

json GenericInventoryToJson(const GenericInventory &inv);
json IndicatorInventoryToJson(const IndicatorInventory &inv);
json FrameInventoryToJson(const FrameInventory &inv);

// Reads generic_frames.json, indicators.json and frames_of_interest.json.
Taxonomies LoadTaxonomies(const std::filesystem::path &config_dir);

// Canonical entries the loader insists on.
const std::vector<std::string> &CanonicalGenericLabels();
struct CanonicalKind {
  std::string_view path;
  bool has_target;
  bool has_reasoning;
};
const std::vector<CanonicalKind> &CanonicalIndicatorKinds();
const std::vector<std::string> &CanonicalVisibleFrames();
const std::vector<std::string> &CanonicalInvisibleFrames();

}  // namespace framescope

#endif  // FRAMESCOPE_TAXONOMY_H_
