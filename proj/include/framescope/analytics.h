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

// Regional aggregations over pipeline outputs.
//
// Every function here is independent of input order: records are keyed and
// sorted before any floating-point accumulation, and ties break
// lexicographically. Callers select the region by passing only that region's
// records.

#ifndef FRAMESCOPE_ANALYTICS_H_
#define FRAMESCOPE_ANALYTICS_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "framescope/corpus.h"
#include "framescope/date.h"
#include "framescope/io.h"
#include "framescope/responses.h"
#include "framescope/semframe.h"
#include "framescope/taxonomy.h"

namespace framescope {

using Shares = std::map<std::string, double>;

// label -> occurrences / all label occurrences. Multi-label articles
// contribute once per label.
Shares GenericFrameShare(const std::vector<GenericFrameAssignment> &assignments);

enum class RateVariant {
  // Mean over articles of (grounded instances / tokens).
  kMeanOfRates,
  // Total grounded instances / total tokens.
  kPooled,
};
RateVariant ParseRateVariant(std::string_view name);
std::string_view RateVariantName(RateVariant variant);

struct IndicatorRates {
  // Every inventory kind, zero when unseen.
  Shares rate;
  size_t articles_used = 0;
  // Articles left out because their token count is zero.
  size_t zero_token_articles = 0;
  // Instances skipped as ungrounded or for an article outside the set.
  size_t ungrounded_instances = 0;
  size_t unmatched_instances = 0;
};

// `articles` is the denominator set: articles with no instances count as 0.
IndicatorRates IndicatorRate(const std::vector<IndicatorInstance> &instances,
                             const std::vector<Article> &articles,
                             const IndicatorInventory &inventory,
                             RateVariant variant = RateVariant::kMeanOfRates);

struct TargetCluster {
  std::string canonical_label;
  // Distinct raw target strings, sorted.
  std::vector<std::string> members;
  // Distinct normal forms, sorted.
  std::vector<std::string> normal_forms;
  size_t count = 0;
  std::string region;
};

// Case fold, drop punctuation and articles (the/a/an), singularize each word
// by suffix rule and fold common nationality adjectives to the place name.
// May return an empty string.
std::string NormalizeTarget(std::string_view target);

// Token-set Jaccard similarity of two normalized targets.
double TargetJaccard(std::string_view a, std::string_view b);

inline constexpr double kTargetMergeThreshold = 0.5;

// Single-linkage merge of targets whose normal forms have Jaccard >=
// `threshold`. Instances without a target are ignored. Sorted by count
// descending, then label.
std::vector<TargetCluster> ClusterTargets(
    const std::vector<IndicatorInstance> &instances, std::string_view region,
    double threshold = kTargetMergeThreshold);

using WordCounts = std::vector<std::pair<std::string, size_t>>;

// Unigram counts over excerpt texts. Throws std::invalid_argument if k == 0.
WordCounts TopWords(const std::vector<IndicatorInstance> &instances, size_t k,
                    const std::set<std::string> &stopwords);
WordCounts TopWords(const std::vector<std::string> &texts, size_t k,
                    const std::set<std::string> &stopwords);

// Renders "(word, count)" cells in columns; rows run to the longest list.
std::string FormatWordCountTable(
    const std::vector<std::pair<std::string, WordCounts>> &columns);

enum class EffectScope { kAll, kVisible, kInvisible };
EffectScope ParseEffectScope(std::string_view name);
std::string_view EffectScopeName(EffectScope scope);

// Occurrences whose frame is in scope; frames outside the inventory are
// ignored.
Shares FrameShare(const std::vector<SemanticFrameOccurrence> &occurrences,
                  const FrameInventory &inventory,
                  EffectScope scope = EffectScope::kAll);

// Actor-group shares of the fillers of `role`. An empty `frame` pools every
// frame.
Shares RoleDistribution(const std::vector<SemanticFrameOccurrence> &occurrences,
                        const Gazetteer &gazetteer, std::string_view frame,
                        std::string_view role);

enum class CooccurrenceScope { kArticle, kSentence };
CooccurrenceScope ParseCooccurrenceScope(std::string_view name);
std::string_view CooccurrenceScopeName(CooccurrenceScope scope);

struct CooccurrenceMatrix {
  // Inventory frames in scope, inventory order.
  std::vector<std::string> frames;
  // cells[i][j]: units containing both; diagonal: units containing frame i.
  std::vector<std::vector<size_t>> cells;
  size_t unit_count = 0;
};

CooccurrenceMatrix Cooccurrence(
    const std::vector<SemanticFrameOccurrence> &occurrences,
    const FrameInventory &inventory, CooccurrenceScope scope,
    EffectScope effect = EffectScope::kAll);

enum class TimeBin { kDay, kWeek, kMonth };
TimeBin ParseTimeBin(std::string_view name);
std::string_view TimeBinName(TimeBin bin);
Date BinStart(const Date &date, TimeBin bin);

struct DatedKey {
  Date date;
  std::string key;
};

struct TimeBucket {
  Date start;
  std::map<std::string, size_t> counts;
};

// Consecutive bins from the first to the last observed one; every key seen
// anywhere appears in every bin.
std::vector<TimeBucket> TemporalSeries(const std::vector<DatedKey> &records,
                                       TimeBin bin);

struct RegionAggregate {
  Region region = Region::kUS;
  Shares generic_frame_share;
  Shares indicator_rate;
  Shares frame_share;
  // (frame, role) -> actor group -> share. Frame "*" pools all frames.
  std::map<std::pair<std::string, std::string>, Shares> role_distribution;
  size_t article_count = 0;
  size_t token_total = 0;
};

json SharesToJson(const Shares &shares);
json RegionAggregateToJson(const RegionAggregate &aggregate);
json ClustersToJson(const std::vector<TargetCluster> &clusters);
json WordCountsToJson(const WordCounts &counts);
json CooccurrenceToJson(const CooccurrenceMatrix &matrix);
json TemporalSeriesToJson(const std::vector<TimeBucket> &series);

// CSV twins. Numbers use the shortest round-trip representation.
std::string FormatDouble(double value);
std::string SharesToCsv(const std::string &key_header, const Shares &shares);
std::string ClustersToCsv(const std::vector<TargetCluster> &clusters);
std::string WordCountsToCsv(const WordCounts &counts);
std::string CooccurrenceToCsv(const CooccurrenceMatrix &matrix);
std::string TemporalSeriesToCsv(const std::vector<TimeBucket> &series);

}  // namespace framescope

#endif  // FRAMESCOPE_ANALYTICS_H_
