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

#include "framescope/taxonomy.h"

#include <algorithm>
#include <set>

#include "framescope/text.h"

namespace framescope {

namespace fs = std::filesystem;

const std::vector<std::string> &CanonicalGenericLabels() {
  static const std::vector<std::string> labels = {
      "Economic",
      "Capacity and resources",
      "Morality",
      "Fairness and equality",
      "Legality, constitutionality and jurisprudence",
      "Policy prescription and evaluation",
      "Crime and punishment",
      "Security and defense",
      "Health and safety",
      "Quality of life",
      "Cultural identity",
      "Public Opinion",
      "Political",
      "External regulation and reputation",
      "None",
  };
  return labels;
}

const std::vector<CanonicalKind> &CanonicalIndicatorKinds() {
  static const std::vector<CanonicalKind> kinds = {
      {"war.adversarial_frame.use_of_adversarial_language", true, true},
      {"war.adversarial_frame.attribution_of_blame", true, true},
      {"war.focus_on_elites", false, false},
      {"war.attribution_of_blame", true, true},
      {"war.labelling_of_people", true, true},
      {"war.language.demonizing_language", true, true},
      {"war.language.dehumanizing_language", true, true},
      {"war.language.victimizing_language", true, true},
      {"war.language.passive_language", true, true},
      {"war.partisan_framing", true, true},
      {"war.focus_on_visible_effects_of_war", false, false},
      {"war.nationalistic_frame.emphasis_on_national_interests", true, true},
      {"war.nationalistic_frame.portrayal_of_national_strength", true, true},
      {"war.military_solution", false, false},
      {"peace.peace_frame.focus_on_consequences_of_conflict", true, true},
      {"peace.peace_frame.inclusion_of_peace_proposals", true, true},
      {"peace.peace_frame.representation_of_multiple_perspectives", true,
       true},
      {"peace.focus_on_invisible_effects_of_war", true, false},
      {"peace.peace_orientation", true, true},
      {"peace.people_orientation", true, true},
      {"peace.victim_orientation", true, true},
  };
  return kinds;
}

const std::vector<std::string> &CanonicalVisibleFrames() {
  static const std::vector<std::string> frames = {
      "Hostile_encounter", "Attack",    "Killing", "Quantified_mass",
      "Military_operation", "Building", "Terrorism", "Death",
      "Destroying",        "Committing_crime", "Firing"};
  return frames;
}

const std::vector<std::string> &CanonicalInvisibleFrames() {
  static const std::vector<std::string> frames = {
      "People", "People_by_age", "Emotion_directed", "Fear", "Kinship",
      "Medical_conditions", "Assistance", "Awareness", "Being_at_risk"};
  return frames;
}

std::string NormalizeLabel(std::string_view label) {
  std::string out;
  bool pending_space = false;
  for (char c : CaseFold(label)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

namespace {

void CheckKeys(const json &obj, std::initializer_list<std::string_view> allowed,
               const std::string &where, std::vector<std::string> *problems) {
  if (!obj.is_object()) {
    problems->push_back(where + ": expected an object");
    return;
  }
  for (const auto &[key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      problems->push_back(where + ": unknown key \"" + key + "\"");
    }
  }
}

void ThrowIfProblems(const std::string &file,
                     const std::vector<std::string> &problems) {
  if (problems.empty()) return;
  std::string msg = file + " failed validation:";
  for (const auto &p : problems) msg += "\n  " + p;
  throw TaxonomyError(msg);
}

const json &RequireArray(const json &doc, const char *key,
                         const std::string &file) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw TaxonomyError(file + ": expected an object with array \"" + key +
                        "\"");
  }
  return doc.at(key);
}

template <typename T>
T Get(const json &obj, const char *key, T fallback, const std::string &where,
      std::vector<std::string> *problems) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    problems->push_back(where + ": bad value for \"" + key + "\"");
    return fallback;
  }
}

}  // namespace

GenericInventory::GenericInventory(std::vector<GenericFrame> frames)
    : frames_(std::move(frames)) {
  for (size_t i = 0; i < frames_.size(); ++i) {
    const auto &f = frames_[i];
    by_label_.emplace(NormalizeLabel(f.label), i);
    by_any_.emplace(NormalizeLabel(f.label), i);
    if (!f.short_name.empty()) by_any_.emplace(NormalizeLabel(f.short_name), i);
    for (const auto &a : f.aliases) by_any_.emplace(NormalizeLabel(a), i);
    if (f.mfc_code > 0) {
      by_any_.emplace(std::to_string(f.mfc_code), i);
      by_any_.emplace(std::to_string(f.mfc_code) + ".0", i);
    }
  }
}

std::vector<std::string> GenericInventory::labels() const {
  std::vector<std::string> out;
  for (const auto &f : frames_) out.push_back(f.label);
  return out;
}

std::vector<std::string> GenericInventory::ScoredLabels(
    bool include_none) const {
  std::vector<std::string> out;
  for (const auto &f : frames_) {
    if (!include_none && f.label == kNoneLabel) continue;
    out.push_back(f.label);
  }
  return out;
}

const GenericFrame *GenericInventory::FindByLabel(
    std::string_view label) const {
  auto it = by_label_.find(NormalizeLabel(label));
  return it == by_label_.end() ? nullptr : &frames_[it->second];
}

const GenericFrame *GenericInventory::FindByAnyName(
    std::string_view name) const {
  auto it = by_any_.find(NormalizeLabel(name));
  return it == by_any_.end() ? nullptr : &frames_[it->second];
}

std::string_view PolarityName(Polarity polarity) {
  return polarity == Polarity::kWar ? "war" : "peace";
}

std::string_view ScaffoldRootKey(Polarity polarity) {
  return polarity == Polarity::kWar ? "war_journalism_indicators"
                                    : "peace_journalism_indicator";
}

IndicatorInventory::IndicatorInventory(std::vector<IndicatorKind> kinds)
    : kinds_(std::move(kinds)) {
  for (size_t i = 0; i < kinds_.size(); ++i) by_path_.emplace(kinds_[i].path, i);
}

const IndicatorKind *IndicatorInventory::Find(std::string_view path) const {
  auto it = by_path_.find(path);
  return it == by_path_.end() ? nullptr : &kinds_[it->second];
}

Polarity IndicatorInventory::PolarityOf(std::string_view path) const {
  const IndicatorKind *kind = Find(path);
  if (!kind) {
    throw std::out_of_range("unknown indicator path: " + std::string(path));
  }
  return kind->polarity;
}

std::string_view EffectClassName(EffectClass effect) {
  switch (effect) {
    case EffectClass::kVisible: return "visible";
    case EffectClass::kInvisible: return "invisible";
    case EffectClass::kOther: return "other";
  }
  return "other";
}

EffectClass ParseEffectClass(std::string_view text) {
  if (text == "visible") return EffectClass::kVisible;
  if (text == "invisible") return EffectClass::kInvisible;
  if (text == "other") return EffectClass::kOther;
  throw std::invalid_argument("unknown effect_class: " + std::string(text));
}

bool FrameOfInterest::HasRole(std::string_view role) const {
  return std::find(roles_of_interest.begin(), roles_of_interest.end(), role) !=
         roles_of_interest.end();
}

FrameInventory::FrameInventory(std::vector<FrameOfInterest> frames)
    : frames_(std::move(frames)) {
  for (size_t i = 0; i < frames_.size(); ++i) {
    by_name_.emplace(frames_[i].name, i);
  }
}

const FrameOfInterest *FrameInventory::Find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &frames_[it->second];
}

GenericInventory GenericInventoryFromJson(const json &doc) {
  const std::string file = "generic_frames";
  std::vector<std::string> problems;
  CheckKeys(doc, {"frames"}, file, &problems);
  std::vector<GenericFrame> frames;
  std::set<std::string> seen;
  for (const auto &entry : RequireArray(doc, "frames", file)) {
    const std::string where =
        file + "[" + std::to_string(frames.size()) + "]";
    CheckKeys(entry,
              {"label", "description", "short_name", "mfc_code", "aliases"},
              where, &problems);
    if (!entry.is_object()) continue;
    GenericFrame f;
    f.label = Get<std::string>(entry, "label", "", where, &problems);
    f.description = Get<std::string>(entry, "description", "", where, &problems);
    f.short_name = Get<std::string>(entry, "short_name", "", where, &problems);
    f.mfc_code = Get<int>(entry, "mfc_code", 0, where, &problems);
    f.aliases = Get<std::vector<std::string>>(entry, "aliases", {}, where,
                                              &problems);
    if (f.label.empty()) {
      problems.push_back(where + ": missing label");
      continue;
    }
    if (!seen.insert(NormalizeLabel(f.label)).second) {
      problems.push_back(where + ": duplicate label \"" + f.label + "\"");
      continue;
    }
    frames.push_back(std::move(f));
  }
  for (const auto &label : CanonicalGenericLabels()) {
    if (!seen.count(NormalizeLabel(label))) {
      problems.push_back("missing canonical frame \"" + label + "\"");
    }
  }
  ThrowIfProblems(file, problems);
  return GenericInventory(std::move(frames));
}

IndicatorInventory IndicatorInventoryFromJson(const json &doc) {
  const std::string file = "indicators";
  std::vector<std::string> problems;
  CheckKeys(doc, {"indicators"}, file, &problems);
  std::vector<IndicatorKind> kinds;
  std::set<std::string> seen;
  for (const auto &entry : RequireArray(doc, "indicators", file)) {
    const std::string where =
        file + "[" + std::to_string(kinds.size()) + "]";
    CheckKeys(entry,
              {"path", "polarity", "has_target", "has_reasoning",
               "description"},
              where, &problems);
    if (!entry.is_object()) continue;
    IndicatorKind k;
    k.path = Get<std::string>(entry, "path", "", where, &problems);
    k.has_target = Get<bool>(entry, "has_target", false, where, &problems);
    k.has_reasoning = Get<bool>(entry, "has_reasoning", false, where, &problems);
    k.description = Get<std::string>(entry, "description", "", where, &problems);
    const auto dot = k.path.find('.');
    const std::string root = k.path.substr(0, dot);
    if (dot == std::string::npos || dot + 1 == k.path.size() ||
        (root != "war" && root != "peace")) {
      problems.push_back(where + ": path \"" + k.path +
                         "\" must start with war. or peace.");
      continue;
    }
    k.polarity = root == "war" ? Polarity::kWar : Polarity::kPeace;
    const std::string polarity =
        Get<std::string>(entry, "polarity", root, where, &problems);
    if (polarity != root) {
      problems.push_back(where + ": polarity \"" + polarity +
                         "\" disagrees with path \"" + k.path + "\"");
    }
    if (!seen.insert(k.path).second) {
      problems.push_back(where + ": duplicate path \"" + k.path + "\"");
      continue;
    }
    kinds.push_back(std::move(k));
  }
  IndicatorInventory inv(std::move(kinds));
  for (const auto &c : CanonicalIndicatorKinds()) {
    const IndicatorKind *k = inv.Find(c.path);
    if (!k) {
      problems.push_back("missing canonical indicator \"" +
                         std::string(c.path) + "\"");
    } else if (k->has_target != c.has_target ||
               k->has_reasoning != c.has_reasoning) {
      problems.push_back("indicator \"" + std::string(c.path) +
                         "\" has the wrong tuple shape");
    }
  }
  ThrowIfProblems(file, problems);
  return inv;
}

FrameInventory FrameInventoryFromJson(const json &doc) {
  const std::string file = "frames_of_interest";
  std::vector<std::string> problems;
  CheckKeys(doc, {"frames"}, file, &problems);
  std::vector<FrameOfInterest> frames;
  std::set<std::string> seen;
  for (const auto &entry : RequireArray(doc, "frames", file)) {
    const std::string where =
        file + "[" + std::to_string(frames.size()) + "]";
    CheckKeys(entry,
              {"label", "effect_class", "roles_of_interest", "description",
               "note"},
              where, &problems);
    if (!entry.is_object()) continue;
    FrameOfInterest f;
    f.name = Get<std::string>(entry, "label", "", where, &problems);
    f.roles_of_interest = Get<std::vector<std::string>>(
        entry, "roles_of_interest", {}, where, &problems);
    f.description = Get<std::string>(entry, "description", "", where, &problems);
    f.note = Get<std::string>(entry, "note", "", where, &problems);
    try {
      f.effect_class = ParseEffectClass(
          Get<std::string>(entry, "effect_class", "other", where, &problems));
    } catch (const std::invalid_argument &e) {
      problems.push_back(where + ": " + e.what());
    }
    if (f.name.empty()) {
      problems.push_back(where + ": missing label");
      continue;
    }
    if (!seen.insert(f.name).second) {
      problems.push_back(where + ": duplicate frame \"" + f.name + "\"");
      continue;
    }
    frames.push_back(std::move(f));
  }
  FrameInventory inv(std::move(frames));
  auto require = [&](const std::vector<std::string> &names, EffectClass cls) {
    for (const auto &name : names) {
      const FrameOfInterest *f = inv.Find(name);
      if (!f) {
        problems.push_back("missing canonical frame \"" + name + "\"");
      } else if (f->effect_class != cls) {
        problems.push_back("frame \"" + name + "\" must be " +
                           std::string(EffectClassName(cls)));
      }
    }
  };
  require(CanonicalVisibleFrames(), EffectClass::kVisible);
  require(CanonicalInvisibleFrames(), EffectClass::kInvisible);
  auto require_roles = [&](const char *frame,
                           std::initializer_list<const char *> roles) {
    const FrameOfInterest *f = inv.Find(frame);
    if (!f) return;
    for (const char *role : roles) {
      if (!f->HasRole(role)) {
        problems.push_back(std::string("frame \"") + frame +
                           "\" is missing role \"" + role + "\"");
      }
    }
  };
  require_roles("Attack", {"Assailant", "Victim", "Circumstances",
                           "Containing_event", "Depictive", "Weapon"});
  require_roles("Killing", {"Killer", "Victim"});
  ThrowIfProblems(file, problems);
  return inv;
}

json GenericInventoryToJson(const GenericInventory &inv) {
  json frames = json::array();
  for (const auto &f : inv.frames()) {
    json e{{"label", f.label}, {"description", f.description}};
    if (!f.short_name.empty()) e["short_name"] = f.short_name;
    if (f.mfc_code > 0) e["mfc_code"] = f.mfc_code;
    if (!f.aliases.empty()) e["aliases"] = f.aliases;
    frames.push_back(std::move(e));
  }
  return json{{"frames", frames}};
}

json IndicatorInventoryToJson(const IndicatorInventory &inv) {
  json kinds = json::array();
  for (const auto &k : inv.kinds()) {
    json e{{"path", k.path},
           {"polarity", PolarityName(k.polarity)},
           {"has_target", k.has_target},
           {"has_reasoning", k.has_reasoning}};
    if (!k.description.empty()) e["description"] = k.description;
    kinds.push_back(std::move(e));
  }
  return json{{"indicators", kinds}};
}

json FrameInventoryToJson(const FrameInventory &inv) {
  json frames = json::array();
  for (const auto &f : inv.frames()) {
    json e{{"label", f.name},
           {"effect_class", EffectClassName(f.effect_class)},
           {"roles_of_interest", f.roles_of_interest}};
    if (!f.description.empty()) e["description"] = f.description;
    if (!f.note.empty()) e["note"] = f.note;
    frames.push_back(std::move(e));
  }
  return json{{"frames", frames}};
}

namespace {

json ReadJsonFile(const fs::path &path) {
  const std::string text = ReadTextFile(path);
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw TaxonomyError(path.string() + ": not valid JSON");
  }
  return doc;
}

}  // namespace

Taxonomies LoadTaxonomies(const fs::path &config_dir) {
  Taxonomies t;
  t.generic = GenericInventoryFromJson(
      ReadJsonFile(config_dir / "generic_frames.json"));
  t.indicators = IndicatorInventoryFromJson(
      ReadJsonFile(config_dir / "indicators.json"));
  t.frames = FrameInventoryFromJson(
      ReadJsonFile(config_dir / "frames_of_interest.json"));
  return t;
}

}  // namespace framescope
