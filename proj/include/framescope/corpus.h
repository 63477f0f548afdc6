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

// News article model, file ingestion and the corpus filtering pipeline
// (domain allowlist, query terms, topic exclusion, date window, length trim).

#ifndef FRAMESCOPE_CORPUS_H_
#define FRAMESCOPE_CORPUS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "framescope/date.h"
#include "framescope/io.h"

namespace framescope {

enum class Region { kUS, kUK, kME };

inline constexpr std::array<Region, 3> kAllRegions = {Region::kUS, Region::kUK,
                                                      Region::kME};

std::string_view RegionName(Region region);
// Accepts "US", "UK", "ME" in any case. Throws std::invalid_argument.
Region ParseRegion(std::string_view text);

struct Article {
  std::string id;
  std::string url;
  std::string domain;
  Region region = Region::kUS;
  std::string title;
  std::string body;
  Date published_at{};
  size_t token_count = 0;
};

json ArticleToJson(const Article &article);
// Throws std::invalid_argument on missing or malformed mandatory fields.
Article ArticleFromJson(const json &record);

// Lowercased host of `url` without scheme, credentials, port, path or a
// leading "www.".
std::string ExtractDomain(std::string_view url);

enum class CorpusFormat { kJsonl, kCsv };
CorpusFormat ParseCorpusFormat(std::string_view text);

struct IngestResult {
  std::vector<Article> articles;
  size_t skipped = 0;
  // Human-readable reason per skipped record, e.g. "line 4: missing body".
  std::vector<std::string> skip_reasons;
};

// Reads a corpus file. Records missing url/region/title/body/published_at,
// or repeating an earlier id, are skipped and counted. An absent id is
// synthesized from a content hash. Throws std::runtime_error if the file
// cannot be read.
IngestResult Ingest(const std::filesystem::path &path, CorpusFormat format);

struct FilterConfig {
  std::map<Region, std::set<std::string>> allowed_domains;
  std::vector<std::string> query_terms;
  // Named conjunctive keyword sets matched against titles.
  std::vector<std::pair<std::string, std::vector<std::string>>>
      exclusion_keyword_sets;
  Date date_min{std::chrono::year{1970}, std::chrono::January,
                std::chrono::day{1}};
  Date date_max{std::chrono::year{9999}, std::chrono::December,
                std::chrono::day{31}};
  double low_trim_fraction = 0.01;
  double high_trim_fraction = 0.05;
  // When set, the length trim is applied within each region separately.
  bool trim_per_region = false;

  // Throws std::invalid_argument when an invariant does not hold.
  void Validate() const;
};

// Parses the "filter" section of a pipeline config. Dates are ISO strings.
FilterConfig FilterConfigFromJson(const json &value);
json FilterConfigToJson(const FilterConfig &config);

struct FilterResult {
  std::vector<Article> retained;
  size_t dropped = 0;
};

FilterResult FilterDomain(const std::vector<Article> &articles,
                          const FilterConfig &config);
// Throws std::invalid_argument if `query_terms` is empty.
FilterResult FilterKeywords(const std::vector<Article> &articles,
                            const std::vector<std::string> &query_terms);
FilterResult FilterTopicExclusion(
    const std::vector<Article> &articles,
    const std::vector<std::pair<std::string, std::vector<std::string>>>
        &exclusion_keyword_sets);
FilterResult FilterDates(const std::vector<Article> &articles, Date date_min,
                         Date date_max);
// Sorts by (token_count, id), drops floor(n*low) from the bottom and
// floor(n*high) from the top, and returns survivors in input order.
// Throws std::invalid_argument when low + high >= 1 or a fraction is
// negative.
FilterResult TrimLengthPercentiles(const std::vector<Article> &articles,
                                   double low_frac, double high_frac);

inline constexpr std::array<std::string_view, 5> kFilterStages = {
    "domain", "keyword", "topic", "date", "length"};

struct FilterReport {
  size_t input_count = 0;
  std::map<std::string, size_t> dropped_by_stage;
  std::map<std::string, std::map<std::string, size_t>> dropped_by_region;
  std::map<std::string, size_t> input_by_region;
  std::map<std::string, size_t> retained_by_region;
  size_t retained_count = 0;

  // input = retained + sum of stage drops, per region and overall.
  bool Reconciles() const;
  json ToJson() const;
};

// Runs domain -> keyword -> topic -> date -> length.
FilterResult RunFilters(const std::vector<Article> &articles,
                        const FilterConfig &config, FilterReport *report);

}  // namespace framescope

#endif  // FRAMESCOPE_CORPUS_H_
