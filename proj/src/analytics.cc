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

#include "framescope/analytics.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "framescope/text.h"

namespace framescope {

namespace {

// Normalizes integer counts into shares; exact for any input order.
Shares ToShares(const std::map<std::string, size_t> &counts) {
  size_t total = 0;
  for (const auto &[k, n] : counts) total += n;
  Shares out;
  if (total == 0) return out;
  for (const auto &[k, n] : counts) {
    out[k] = static_cast<double>(n) / static_cast<double>(total);
  }
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Shares GenericFrameShare(
    const std::vector<GenericFrameAssignment> &assignments) {
  std::map<std::string, size_t> counts;
  for (const auto &a : assignments) {
    const std::set<std::string> unique(a.frames.begin(), a.frames.end());
    for (const auto &label : unique) ++counts[label];
  }
  return ToShares(counts);
}

RateVariant ParseRateVariant(std::string_view name) {
  if (name == "mean") return RateVariant::kMeanOfRates;
  if (name == "pooled") return RateVariant::kPooled;
  throw std::invalid_argument("unknown rate variant \"" + std::string(name) +
                              "\" (expected mean or pooled)");
}

std::string_view RateVariantName(RateVariant variant) {
  return variant == RateVariant::kMeanOfRates ? "mean" : "pooled";
}

IndicatorRates IndicatorRate(const std::vector<IndicatorInstance> &instances,
                             const std::vector<Article> &articles,
                             const IndicatorInventory &inventory,
                             RateVariant variant) {
  IndicatorRates out;
  std::map<std::string, size_t> tokens;
  for (const auto &a : articles) {
    if (a.token_count == 0) {
      ++out.zero_token_articles;
      continue;
    }
    tokens[a.id] = a.token_count;
  }
  // article -> kind -> grounded count.
  std::map<std::string, std::map<std::string, size_t>> counts;
  for (const auto &inst : instances) {
    if (!inst.grounded) {
      ++out.ungrounded_instances;
      continue;
    }
    if (!tokens.count(inst.article_id) || !inventory.Find(inst.kind_path)) {
      ++out.unmatched_instances;
      continue;
    }
    ++counts[inst.article_id][inst.kind_path];
  }
  out.articles_used = tokens.size();
  for (const auto &kind : inventory.kinds()) {
    long double value = 0.0L;
    if (variant == RateVariant::kMeanOfRates) {
      long double sum = 0.0L;
      for (const auto &[id, n] : tokens) {
        auto it = counts.find(id);
        if (it == counts.end()) continue;
        auto k = it->second.find(kind.path);
        if (k == it->second.end()) continue;
        sum += static_cast<long double>(k->second) / n;
      }
      if (!tokens.empty()) value = sum / tokens.size();
    } else {
      size_t hits = 0, total = 0;
      for (const auto &[id, n] : tokens) {
        total += n;
        auto it = counts.find(id);
        if (it == counts.end()) continue;
        auto k = it->second.find(kind.path);
        if (k != it->second.end()) hits += k->second;
      }
      if (total > 0) value = static_cast<long double>(hits) / total;
    }
    out.rate[kind.path] = static_cast<double>(value);
  }
  return out;
}

namespace {

std::string Singularize(const std::string &w) {
  if (w.size() <= 3) return w;
  if (EndsWith(w, "ies") && w.size() > 4) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "as") && !EndsWith(w, "sis")) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

// Nationality adjectives folded to the place name so "Israeli government"
// and "Israel" share a token.
std::string FoldDemonym(const std::string &w) {
  static const std::map<std::string, std::string> kDemonyms = {
      {"american", "america"}, {"british", "britain"},
      {"egyptian", "egypt"},   {"gazan", "gaza"},
      {"iranian", "iran"},     {"israeli", "israel"},
      {"lebanese", "lebanon"}, {"palestinian", "palestine"},
      {"qatari", "qatar"},     {"syrian", "syria"},
      {"yemeni", "yemen"}};
  auto it = kDemonyms.find(w);
  return it == kDemonyms.end() ? w : it->second;
}

std::vector<std::string> TargetTokens(std::string_view normal) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < normal.size()) {
    size_t sp = normal.find(' ', pos);
    if (sp == std::string_view::npos) sp = normal.size();
    if (sp > pos) out.emplace_back(normal.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

}  // namespace

std::string NormalizeTarget(std::string_view target) {
  std::string out;
  for (std::string word : Tokenize(CaseFold(target))) {
    for (std::string_view possessive : {"'s", "\xE2\x80\x99s"}) {
      if (EndsWith(word, possessive) && word.size() > possessive.size()) {
        word.erase(word.size() - possessive.size());
      }
    }
    while (!word.empty() && (word.back() == '\'' || word.back() == '-')) {
      word.pop_back();
    }
    if (word.empty() || word == "the" || word == "a" || word == "an") continue;
    if (!out.empty()) out += ' ';
    out += FoldDemonym(Singularize(word));
  }
  return out;
}

double TargetJaccard(std::string_view a, std::string_view b) {
  const auto ta = TargetTokens(a), tb = TargetTokens(b);
  const std::set<std::string> sa(ta.begin(), ta.end());
  const std::set<std::string> sb(tb.begin(), tb.end());
  if (sa.empty() && sb.empty()) return 0.0;
  size_t inter = 0;
  for (const auto &t : sa) inter += sb.count(t);
  return static_cast<double>(inter) /
         static_cast<double>(sa.size() + sb.size() - inter);
}

std::vector<TargetCluster> ClusterTargets(
    const std::vector<IndicatorInstance> &instances, std::string_view region,
    double threshold) {
  // normal form -> (occurrences, raw strings)
  std::map<std::string, std::pair<size_t, std::set<std::string>>> forms;
  for (const auto &inst : instances) {
    if (!inst.target) continue;
    std::string normal = NormalizeTarget(*inst.target);
    if (normal.empty()) continue;
    auto &entry = forms[normal];
    ++entry.first;
    entry.second.insert(*inst.target);
  }
  std::vector<std::string> keys;
  for (const auto &[k, v] : forms) keys.push_back(k);
  std::vector<size_t> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < keys.size(); ++i) {
    for (size_t j = i + 1; j < keys.size(); ++j) {
      if (TargetJaccard(keys[i], keys[j]) >= threshold) {
        const size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < keys.size(); ++i) groups[find(i)].push_back(i);

  std::vector<TargetCluster> out;
  for (const auto &[root, members] : groups) {
    TargetCluster c;
    c.region = std::string(region);
    std::set<std::string> raws;
    size_t best = 0;
    for (size_t i : members) {
      const auto &[n, raw] = forms.at(keys[i]);
      c.count += n;
      c.normal_forms.push_back(keys[i]);
      raws.insert(raw.begin(), raw.end());
      // Members are visited in lexicographic order, so ">" keeps the
      // smallest label among equally frequent forms.
      if (n > best) {
        best = n;
        c.canonical_label = keys[i];
      }
    }
    c.members.assign(raws.begin(), raws.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const TargetCluster &a, const TargetCluster &b) {
              if (a.count != b.count) return a.count > b.count;
              return a.canonical_label < b.canonical_label;
            });
  return out;
}

WordCounts TopWords(const std::vector<std::string> &texts, size_t k,
                    const std::set<std::string> &stopwords) {
  if (k == 0) throw std::invalid_argument("top_words: k must be positive");
  std::set<std::string> stop;
  for (const auto &s : stopwords) stop.insert(CaseFold(s));
  std::map<std::string, size_t> counts;
  for (const auto &text : texts) {
    for (auto &word : Tokenize(CaseFold(text))) {
      if (!stop.count(word)) ++counts[word];
    }
  }
  WordCounts out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

WordCounts TopWords(const std::vector<IndicatorInstance> &instances, size_t k,
                    const std::set<std::string> &stopwords) {
  std::vector<std::string> texts;
  texts.reserve(instances.size());
  for (const auto &inst : instances) texts.push_back(inst.excerpt);
  return TopWords(texts, k, stopwords);
}

std::string FormatWordCountTable(
    const std::vector<std::pair<std::string, WordCounts>> &columns) {
  size_t rows = 0;
  std::vector<size_t> width;
  std::vector<std::vector<std::string>> cells;
  for (const auto &[header, counts] : columns) {
    std::vector<std::string> col;
    size_t w = header.size();
    for (const auto &[word, n] : counts) {
      col.push_back("(" + word + ", " + std::to_string(n) + ")");
      w = std::max(w, col.back().size());
    }
    rows = std::max(rows, col.size());
    width.push_back(w);
    cells.push_back(std::move(col));
  }
  auto pad = [](const std::string &s, size_t w) {
    return std::string(w - std::min(w, s.size()), ' ') + s;
  };
  std::string out;
  for (size_t c = 0; c < columns.size(); ++c) {
    out += (c ? " | " : "") + pad(columns[c].first, width[c]);
  }
  out += "\n";
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < columns.size(); ++c) {
      const std::string cell = r < cells[c].size() ? cells[c][r] : "";
      out += (c ? " | " : "") + pad(cell, width[c]);
    }
    out += "\n";
  }
  return out;
}

EffectScope ParseEffectScope(std::string_view name) {
  if (name == "all") return EffectScope::kAll;
  if (name == "visible") return EffectScope::kVisible;
  if (name == "invisible") return EffectScope::kInvisible;
  throw std::invalid_argument("unknown effect scope \"" + std::string(name) +
                              "\" (expected all, visible or invisible)");
}

std::string_view EffectScopeName(EffectScope scope) {
  switch (scope) {
    case EffectScope::kAll:
      return "all";
    case EffectScope::kVisible:
      return "visible";
    case EffectScope::kInvisible:
      return "invisible";
  }
  return "all";
}

namespace {

bool InScope(const FrameOfInterest &frame, EffectScope scope) {
  switch (scope) {
    case EffectScope::kAll:
      return true;
    case EffectScope::kVisible:
      return frame.effect_class == EffectClass::kVisible;
    case EffectScope::kInvisible:
      return frame.effect_class == EffectClass::kInvisible;
  }
  return false;
}

}  // namespace

Shares FrameShare(const std::vector<SemanticFrameOccurrence> &occurrences,
                  const FrameInventory &inventory, EffectScope scope) {
  std::map<std::string, size_t> counts;
  for (const auto &o : occurrences) {
    const FrameOfInterest *frame = inventory.Find(o.frame_name);
    if (frame && InScope(*frame, scope)) ++counts[o.frame_name];
  }
  return ToShares(counts);
}

Shares RoleDistribution(const std::vector<SemanticFrameOccurrence> &occurrences,
                        const Gazetteer &gazetteer, std::string_view frame,
                        std::string_view role) {
  std::map<std::string, size_t> counts;
  for (const auto &o : occurrences) {
    if (!frame.empty() && o.frame_name != frame) continue;
    auto it = o.roles.find(std::string(role));
    if (it == o.roles.end() || Trim(it->second.text).empty()) continue;
    ++counts[gazetteer.GroupOf(it->second.text)];
  }
  return ToShares(counts);
}

CooccurrenceScope ParseCooccurrenceScope(std::string_view name) {
  if (name == "article") return CooccurrenceScope::kArticle;
  if (name == "sentence") return CooccurrenceScope::kSentence;
  throw std::invalid_argument("unknown co-occurrence scope \"" +
                              std::string(name) +
                              "\" (expected article or sentence)");
}

std::string_view CooccurrenceScopeName(CooccurrenceScope scope) {
  return scope == CooccurrenceScope::kArticle ? "article" : "sentence";
}

CooccurrenceMatrix Cooccurrence(
    const std::vector<SemanticFrameOccurrence> &occurrences,
    const FrameInventory &inventory, CooccurrenceScope scope,
    EffectScope effect) {
  CooccurrenceMatrix m;
  std::map<std::string, size_t> index;
  for (const auto &f : inventory.frames()) {
    if (!InScope(f, effect)) continue;
    index[f.name] = m.frames.size();
    m.frames.push_back(f.name);
  }
  m.cells.assign(m.frames.size(), std::vector<size_t>(m.frames.size(), 0));
  std::map<std::pair<std::string, size_t>, std::set<size_t>> units;
  for (const auto &o : occurrences) {
    auto it = index.find(o.frame_name);
    if (it == index.end()) continue;
    const size_t sentence =
        scope == CooccurrenceScope::kSentence ? o.sentence_index : 0;
    units[{o.article_id, sentence}].insert(it->second);
  }
  m.unit_count = units.size();
  for (const auto &[unit, frames] : units) {
    for (size_t a : frames) {
      for (size_t b : frames) ++m.cells[a][b];
    }
  }
  return m;
}

TimeBin ParseTimeBin(std::string_view name) {
  if (name == "day") return TimeBin::kDay;
  if (name == "week") return TimeBin::kWeek;
  if (name == "month") return TimeBin::kMonth;
  throw std::invalid_argument("unknown time bin \"" + std::string(name) +
                              "\" (expected day, week or month)");
}

std::string_view TimeBinName(TimeBin bin) {
  switch (bin) {
    case TimeBin::kDay:
      return "day";
    case TimeBin::kWeek:
      return "week";
    case TimeBin::kMonth:
      return "month";
  }
  return "day";
}

Date BinStart(const Date &date, TimeBin bin) {
  switch (bin) {
    case TimeBin::kDay:
      return date;
    case TimeBin::kWeek:
      return IsoWeekStart(date);
    case TimeBin::kMonth:
      return MonthStart(date);
  }
  return date;
}

namespace {

Date NextBin(const Date &start, TimeBin bin) {
  using std::chrono::sys_days;
  switch (bin) {
    case TimeBin::kDay:
      return Date{sys_days{start} + std::chrono::days{1}};
    case TimeBin::kWeek:
      return Date{sys_days{start} + std::chrono::days{7}};
    case TimeBin::kMonth:
      return start + std::chrono::months{1};
  }
  return start;
}

}  // namespace

std::vector<TimeBucket> TemporalSeries(const std::vector<DatedKey> &records,
                                       TimeBin bin) {
  std::vector<TimeBucket> out;
  if (records.empty()) return out;
  std::map<Date, std::map<std::string, size_t>> counts;
  std::set<std::string> keys;
  for (const auto &r : records) {
    ++counts[BinStart(r.date, bin)][r.key];
    keys.insert(r.key);
  }
  const Date last = counts.rbegin()->first;
  for (Date d = counts.begin()->first; d <= last; d = NextBin(d, bin)) {
    TimeBucket bucket;
    bucket.start = d;
    for (const auto &k : keys) bucket.counts[k] = 0;
    if (auto it = counts.find(d); it != counts.end()) {
      for (const auto &[k, n] : it->second) bucket.counts[k] = n;
    }
    out.push_back(std::move(bucket));
  }
  return out;
}

json SharesToJson(const Shares &shares) {
  json out = json::object();
  for (const auto &[k, v] : shares) out[k] = v;
  return out;
}

json RegionAggregateToJson(const RegionAggregate &a) {
  json roles = json::array();
  for (const auto &[key, shares] : a.role_distribution) {
    roles.push_back({{"frame", key.first},
                     {"role", key.second},
                     {"groups", SharesToJson(shares)}});
  }
  return json{{"region", RegionName(a.region)},
              {"article_count", a.article_count},
              {"token_total", a.token_total},
              {"generic_frame_share", SharesToJson(a.generic_frame_share)},
              {"indicator_rate", SharesToJson(a.indicator_rate)},
              {"frame_share", SharesToJson(a.frame_share)},
              {"role_distribution", roles}};
}

json ClustersToJson(const std::vector<TargetCluster> &clusters) {
  json out = json::array();
  for (const auto &c : clusters) {
    out.push_back({{"canonical_label", c.canonical_label},
                   {"members", c.members},
                   {"normal_forms", c.normal_forms},
                   {"count", c.count},
                   {"region", c.region}});
  }
  return out;
}

json WordCountsToJson(const WordCounts &counts) {
  json out = json::array();
  for (const auto &[w, n] : counts) out.push_back(json::array({w, n}));
  return out;
}

json CooccurrenceToJson(const CooccurrenceMatrix &m) {
  return json{{"frames", m.frames},
              {"cells", m.cells},
              {"unit_count", m.unit_count}};
}

json TemporalSeriesToJson(const std::vector<TimeBucket> &series) {
  json out = json::array();
  for (const auto &b : series) {
    json counts = json::object();
    for (const auto &[k, n] : b.counts) counts[k] = n;
    out.push_back({{"bin_start", FormatIsoDate(b.start)}, {"counts", counts}});
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string SharesToCsv(const std::string &key_header, const Shares &shares) {
  std::string out = CsvEscape(key_header) + ",value\n";
  for (const auto &[k, v] : shares) {
    out += CsvEscape(k) + "," + FormatDouble(v) + "\n";
  }
  return out;
}

std::string ClustersToCsv(const std::vector<TargetCluster> &clusters) {
  std::string out = "region,canonical_label,count,members\n";
  for (const auto &c : clusters) {
    std::string members;
    for (const auto &m : c.members) members += (members.empty() ? "" : "|") + m;
    out += CsvEscape(c.region) + "," + CsvEscape(c.canonical_label) + "," +
           std::to_string(c.count) + "," + CsvEscape(members) + "\n";
  }
  return out;
}

std::string WordCountsToCsv(const WordCounts &counts) {
  std::string out = "word,count\n";
  for (const auto &[w, n] : counts) {
    out += CsvEscape(w) + "," + std::to_string(n) + "\n";
  }
  return out;
}

std::string CooccurrenceToCsv(const CooccurrenceMatrix &m) {
  std::string out = "frame";
  for (const auto &f : m.frames) out += "," + CsvEscape(f);
  out += "\n";
  for (size_t i = 0; i < m.frames.size(); ++i) {
    out += CsvEscape(m.frames[i]);
    for (size_t n : m.cells[i]) out += "," + std::to_string(n);
    out += "\n";
  }
  return out;
}

std::string TemporalSeriesToCsv(const std::vector<TimeBucket> &series) {
  std::string out = "bin_start,key,count\n";
  for (const auto &b : series) {
    for (const auto &[k, n] : b.counts) {
      out += FormatIsoDate(b.start) + "," + CsvEscape(k) + "," +
             std::to_string(n) + "\n";
    }
  }
  return out;
}

}  // namespace framescope
