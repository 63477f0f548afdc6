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

// Multi-label evaluation of generic frame predictions against gold labels.
//
// Conventions:
//   * A 0/0 precision, recall or F1 is reported as 0 and named in `flags`.
//   * Macro averages run over every scored label, zero cells included.
//   * "None" is left out of scoring unless EvalOptions::include_none.
//   * The overlap rate only counts pairs whose gold set is non-empty.

#ifndef FRAMESCOPE_EVALKIT_H_
#define FRAMESCOPE_EVALKIT_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "framescope/io.h"
#include "framescope/responses.h"
#include "framescope/taxonomy.h"

namespace framescope {

struct LabeledPair {
  std::string article_id;
  std::set<std::string> gold;
  std::set<std::string> predicted;
};

struct LabelMetrics {
  std::string label;
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
  // Number of pairs whose gold set has the label.
  size_t support = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct AveragedMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct MetricReport {
  // Scored labels in inventory order.
  std::vector<LabelMetrics> per_label;
  AveragedMetrics micro;
  AveragedMetrics macro;
  AveragedMetrics weighted;
  AveragedMetrics samples;
  double non_zero_overlap_rate = 0.0;
  size_t pair_count = 0;
  size_t pairs_with_gold = 0;
  bool include_none = false;
  // One entry per 0/0 cell, e.g. "precision undefined for Fairness and
  // equality".
  std::vector<std::string> flags;
};

struct EvalOptions {
  bool include_none = false;
};

// Throws std::invalid_argument on an empty input or a label that is not a
// canonical inventory label (the message names the label).
MetricReport Evaluate(const std::vector<LabeledPair> &pairs,
                      const GenericInventory &inventory,
                      const EvalOptions &options = {});

json MetricReportToJson(const MetricReport &report);

// Text table with Label / Precision / Recall / F1-score columns, one row per
// label (short names, alphabetical) followed by the four averages.
std::string FormatMetricTable(const MetricReport &report,
                              const GenericInventory &inventory);

enum class GoldFormat {
  // {"article_id": ..., "labels": [...]}
  kLabels,
  // {"article_id": ..., "annotations": [...]} where entries are label names,
  // short names, MFC codes, {"code": ...} objects, or an MFC-style nested
  // {"framing": {annotator: [{"code": "7.0", ...}]}} object.
  kMfc,
};

GoldFormat ParseGoldFormat(std::string_view name);

// article_id -> canonical label set. Throws std::invalid_argument naming any
// label that cannot be mapped onto the inventory.
std::map<std::string, std::set<std::string>> LoadGold(
    const std::filesystem::path &path, GoldFormat format,
    const GenericInventory &inventory);

// Same mapping for records already in memory.
std::set<std::string> GoldLabelsFromRecord(const json &record,
                                           GoldFormat format,
                                           const GenericInventory &inventory);

struct PairedLabels {
  std::vector<LabeledPair> pairs;
  // Gold articles without a prediction and vice versa.
  size_t missing_prediction = 0;
  size_t missing_gold = 0;
};

// Joins by article id; pairs come out sorted by id.
PairedLabels PairLabels(
    const std::map<std::string, std::set<std::string>> &gold,
    const std::vector<GenericFrameAssignment> &predictions);

}  // namespace framescope

#endif  // FRAMESCOPE_EVALKIT_H_
