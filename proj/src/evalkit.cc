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

#include "framescope/evalkit.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "framescope/text.h"

namespace framescope {

namespace {

// Ratio with the 0/0 convention; `undefined` is set when den == 0.
double Ratio(size_t num, size_t den, bool *undefined) {
  if (den == 0) {
    *undefined = true;
    return 0.0;
  }
  *undefined = false;
  return static_cast<double>(num) / static_cast<double>(den);
}

// Long double accumulation keeps means of identical values exact.
double Mean(const std::vector<double> &values) {
  if (values.empty()) return 0.0;
  long double sum = 0.0L;
  for (double v : values) sum += v;
  return static_cast<double>(sum / static_cast<long double>(values.size()));
}

void CheckLabels(const std::set<std::string> &labels,
                 const GenericInventory &inventory, const std::string &id) {
  for (const auto &label : labels) {
    const GenericFrame *frame = inventory.FindByLabel(label);
    if (!frame || frame->label != label) {
      throw std::invalid_argument("article " + id + ": label \"" + label +
                                  "\" is not a canonical frame label");
    }
  }
}

}  // namespace

MetricReport Evaluate(const std::vector<LabeledPair> &pairs,
                      const GenericInventory &inventory,
                      const EvalOptions &options) {
  if (pairs.empty()) throw std::invalid_argument("evaluate: no pairs");
  MetricReport report;
  report.include_none = options.include_none;
  report.pair_count = pairs.size();
  const std::vector<std::string> labels =
      inventory.ScoredLabels(options.include_none);
  const std::set<std::string> scored(labels.begin(), labels.end());

  for (const auto &label : labels) {
    LabelMetrics m;
    m.label = label;
    report.per_label.push_back(m);
  }
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;

  std::vector<double> sample_p, sample_r, sample_f;
  size_t overlap = 0;
  size_t undefined_sample_p = 0, undefined_sample_r = 0;
  for (const auto &pair : pairs) {
    CheckLabels(pair.gold, inventory, pair.article_id);
    CheckLabels(pair.predicted, inventory, pair.article_id);
    std::set<std::string> gold, pred;
    for (const auto &l : pair.gold) {
      if (scored.count(l)) gold.insert(l);
    }
    for (const auto &l : pair.predicted) {
      if (scored.count(l)) pred.insert(l);
    }
    size_t both = 0;
    for (const auto &l : gold) {
      LabelMetrics &m = report.per_label[index.at(l)];
      ++m.support;
      if (pred.count(l)) {
        ++m.tp;
        ++both;
      } else {
        ++m.fn;
      }
    }
    for (const auto &l : pred) {
      if (!gold.count(l)) ++report.per_label[index.at(l)].fp;
    }
    bool undefined;
    sample_p.push_back(Ratio(both, pred.size(), &undefined));
    undefined_sample_p += undefined;
    sample_r.push_back(Ratio(both, gold.size(), &undefined));
    undefined_sample_r += undefined;
    sample_f.push_back(Ratio(2 * both, gold.size() + pred.size(), &undefined));
    if (!gold.empty()) {
      ++report.pairs_with_gold;
      if (both > 0) ++overlap;
    }
  }

  size_t tp = 0, fp = 0, fn = 0, support = 0;
  std::vector<double> ps, rs, fs;
  long double wp = 0.0L, wr = 0.0L, wf = 0.0L;
  for (auto &m : report.per_label) {
    bool undefined;
    m.precision = Ratio(m.tp, m.tp + m.fp, &undefined);
    if (undefined) report.flags.push_back("precision undefined for " + m.label);
    m.recall = Ratio(m.tp, m.tp + m.fn, &undefined);
    if (undefined) report.flags.push_back("recall undefined for " + m.label);
    m.f1 = Ratio(2 * m.tp, 2 * m.tp + m.fp + m.fn, &undefined);
    if (undefined) report.flags.push_back("f1 undefined for " + m.label);
    ps.push_back(m.precision);
    rs.push_back(m.recall);
    fs.push_back(m.f1);
    wp += static_cast<long double>(m.precision) * m.support;
    wr += static_cast<long double>(m.recall) * m.support;
    wf += static_cast<long double>(m.f1) * m.support;
    tp += m.tp;
    fp += m.fp;
    fn += m.fn;
    support += m.support;
  }
  bool undefined;
  report.micro.precision = Ratio(tp, tp + fp, &undefined);
  if (undefined) report.flags.push_back("micro precision undefined");
  report.micro.recall = Ratio(tp, tp + fn, &undefined);
  if (undefined) report.flags.push_back("micro recall undefined");
  report.micro.f1 = Ratio(2 * tp, 2 * tp + fp + fn, &undefined);
  report.macro = {Mean(ps), Mean(rs), Mean(fs)};
  if (support > 0) {
    const long double s = static_cast<long double>(support);
    report.weighted = {static_cast<double>(wp / s),
                       static_cast<double>(wr / s),
                       static_cast<double>(wf / s)};
  } else {
    report.flags.push_back("weighted average undefined: no gold support");
  }
  report.samples = {Mean(sample_p), Mean(sample_r), Mean(sample_f)};
  if (undefined_sample_p > 0) {
    report.flags.push_back("samples precision undefined for " +
                           std::to_string(undefined_sample_p) + " pair(s)");
  }
  if (undefined_sample_r > 0) {
    report.flags.push_back("samples recall undefined for " +
                           std::to_string(undefined_sample_r) + " pair(s)");
  }
  report.non_zero_overlap_rate =
      Ratio(overlap, report.pairs_with_gold, &undefined);
  if (undefined) report.flags.push_back("overlap rate undefined: no gold");
  return report;
}

json MetricReportToJson(const MetricReport &r) {
  json labels = json::array();
  for (const auto &m : r.per_label) {
    labels.push_back({{"label", m.label},
                      {"precision", m.precision},
                      {"recall", m.recall},
                      {"f1", m.f1},
                      {"support", m.support},
                      {"tp", m.tp},
                      {"fp", m.fp},
                      {"fn", m.fn}});
  }
  auto avg = [](const AveragedMetrics &a) {
    return json{{"precision", a.precision}, {"recall", a.recall},
                {"f1", a.f1}};
  };
  return json{{"per_label", labels},
              {"micro", avg(r.micro)},
              {"macro", avg(r.macro)},
              {"weighted", avg(r.weighted)},
              {"samples", avg(r.samples)},
              {"non_zero_overlap_rate", r.non_zero_overlap_rate},
              {"pair_count", r.pair_count},
              {"pairs_with_gold", r.pairs_with_gold},
              {"include_none", r.include_none},
              {"flags", r.flags}};
}

std::string FormatMetricTable(const MetricReport &report,
                              const GenericInventory &inventory) {
  std::vector<std::pair<std::string, const LabelMetrics *>> rows;
  for (const auto &m : report.per_label) {
    const GenericFrame *frame = inventory.FindByLabel(m.label);
    std::string name = frame && !frame->short_name.empty() ? frame->short_name
                                                           : m.label;
    rows.emplace_back(std::move(name), &m);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  size_t width = std::string("weighted avg").size();
  for (const auto &r : rows) width = std::max(width, r.first.size());

  std::string out;
  char buf[256];
  auto line = [&](const std::string &label, const std::string &p,
                  const std::string &r, const std::string &f) {
    std::snprintf(buf, sizeof(buf), "%-*s  %9s  %9s  %9s\n",
                  static_cast<int>(width), label.c_str(), p.c_str(), r.c_str(),
                  f.c_str());
    out += buf;
  };
  auto num = [](double v) {
    char b[32];
    std::snprintf(b, sizeof(b), "%.2f", v);
    return std::string(b);
  };
  const std::string rule(width + 2 + 3 * 11 - 2, '-');
  line("Label", "Precision", "Recall", "F1-score");
  out += rule + "\n";
  for (const auto &[name, m] : rows) {
    line(name, num(m->precision), num(m->recall), num(m->f1));
  }
  out += rule + "\n";
  const std::pair<const char *, const AveragedMetrics *> averages[] = {
      {"micro avg", &report.micro},
      {"macro avg", &report.macro},
      {"weighted avg", &report.weighted},
      {"samples avg", &report.samples}};
  for (const auto &[name, a] : averages) {
    line(name, num(a->precision), num(a->recall), num(a->f1));
  }
  return out;
}

GoldFormat ParseGoldFormat(std::string_view name) {
  const std::string n = AsciiLower(name);
  if (n == "labels" || n == "jsonl") return GoldFormat::kLabels;
  if (n == "mfc") return GoldFormat::kMfc;
  throw std::invalid_argument("unknown gold format \"" + std::string(name) +
                              "\" (expected labels or mfc)");
}

namespace {

std::string MapLabel(const json &value, const GenericInventory &inventory) {
  std::string name;
  if (value.is_string()) {
    name = value.get<std::string>();
  } else if (value.is_number()) {
    name = value.dump();
  } else if (value.is_object()) {
    for (const char *key : {"code", "label", "frame"}) {
      if (value.contains(key)) return MapLabel(value.at(key), inventory);
    }
    throw std::invalid_argument("annotation without code or label: " +
                                value.dump());
  } else {
    throw std::invalid_argument("unusable annotation: " + value.dump());
  }
  const GenericFrame *frame = inventory.FindByAnyName(name);
  if (!frame) {
    throw std::invalid_argument("gold label \"" + name +
                                "\" does not map to any frame");
  }
  return frame->label;
}

}  // namespace

std::set<std::string> GoldLabelsFromRecord(const json &record,
                                           GoldFormat format,
                                           const GenericInventory &inventory) {
  std::set<std::string> labels;
  const char *key = format == GoldFormat::kLabels ? "labels" : "annotations";
  if (!record.contains(key)) {
    throw std::invalid_argument(std::string("gold record without \"") + key +
                                "\"");
  }
  const json &value = record.at(key);
  if (value.is_array()) {
    for (const auto &v : value) labels.insert(MapLabel(v, inventory));
  } else if (format == GoldFormat::kMfc && value.is_object()) {
    const json *framing = value.contains("framing") ? &value.at("framing")
                                                    : &value;
    for (const auto &[annotator, spans] : framing->items()) {
      if (!spans.is_array()) {
        throw std::invalid_argument("annotator " + annotator +
                                    ": expected a list");
      }
      for (const auto &s : spans) labels.insert(MapLabel(s, inventory));
    }
  } else if (!value.is_null()) {
    throw std::invalid_argument(std::string("gold \"") + key +
                                "\" has the wrong type");
  }
  return labels;
}

std::map<std::string, std::set<std::string>> LoadGold(
    const std::filesystem::path &path, GoldFormat format,
    const GenericInventory &inventory) {
  std::map<std::string, std::set<std::string>> gold;
  ReadJsonl(
      path,
      [&](const json &r, size_t line) {
        try {
          if (!r.contains("article_id")) {
            throw std::invalid_argument("missing article_id");
          }
          const json &id = r.at("article_id");
          const std::string key =
              id.is_string() ? id.get<std::string>() : id.dump();
          auto labels = GoldLabelsFromRecord(r, format, inventory);
          gold[key].insert(labels.begin(), labels.end());
        } catch (const std::exception &e) {
          throw std::invalid_argument(path.string() + ":" +
                                      std::to_string(line) + ": " + e.what());
        }
      },
      [&](size_t line, const std::string &why) {
        throw std::invalid_argument(path.string() + ":" +
                                    std::to_string(line) + ": " + why);
      });
  return gold;
}

PairedLabels PairLabels(
    const std::map<std::string, std::set<std::string>> &gold,
    const std::vector<GenericFrameAssignment> &predictions) {
  PairedLabels out;
  std::map<std::string, const GenericFrameAssignment *> by_id;
  for (const auto &p : predictions) by_id[p.article_id] = &p;
  for (const auto &[id, labels] : gold) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      ++out.missing_prediction;
      continue;
    }
    out.pairs.push_back(
        {id, labels,
         std::set<std::string>(it->second->frames.begin(),
                               it->second->frames.end())});
  }
  for (const auto &[id, p] : by_id) {
    if (!gold.count(id)) ++out.missing_gold;
  }
  return out;
}

}  // namespace framescope
