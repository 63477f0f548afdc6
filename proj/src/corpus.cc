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

#include "framescope/corpus.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "framescope/text.h"

namespace framescope {

std::string_view RegionName(Region region) {
  switch (region) {
    case Region::kUS: return "US";
    case Region::kUK: return "UK";
    case Region::kME: return "ME";
  }
  return "?";
}

Region ParseRegion(std::string_view text) {
  const std::string r = AsciiLower(Trim(text));
  if (r == "us") return Region::kUS;
  if (r == "uk") return Region::kUK;
  if (r == "me") return Region::kME;
  throw std::invalid_argument("unknown region: " + std::string(text));
}

json ArticleToJson(const Article &a) {
  return json{{"id", a.id},
              {"url", a.url},
              {"domain", a.domain},
              {"region", RegionName(a.region)},
              {"title", a.title},
              {"body", a.body},
              {"published_at", FormatIsoDate(a.published_at)},
              {"token_count", a.token_count}};
}

namespace {

std::string RequireString(const json &record, const char *key) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    throw std::invalid_argument(std::string("missing ") + key);
  }
  return it->get<std::string>();
}

std::string SynthesizeId(const Article &a) {
  return HexDigest(a.url + '\n' + a.title + '\n' + a.body);
}

Article BuildArticle(std::string id, std::string url, std::string region,
                     std::string title, std::string body,
                     std::string published_at) {
  if (url.empty()) throw std::invalid_argument("missing url");
  if (body.empty()) throw std::invalid_argument("missing body");
  Article a;
  a.url = std::move(url);
  a.domain = ExtractDomain(a.url);
  if (a.domain.empty()) throw std::invalid_argument("url has no host");
  a.region = ParseRegion(region);
  a.title = std::move(title);
  a.body = std::move(body);
  auto date = ParseIsoDate(published_at);
  if (!date) throw std::invalid_argument("bad published_at");
  a.published_at = *date;
  a.token_count = Tokenize(a.body).size();
  a.id = id.empty() ? SynthesizeId(a) : std::move(id);
  return a;
}

}  // namespace

Article ArticleFromJson(const json &record) {
  std::string id;
  if (auto it = record.find("id"); it != record.end() && !it->is_null()) {
    if (it->is_string()) {
      id = it->get<std::string>();
    } else if (it->is_number_integer()) {
      id = std::to_string(it->get<long long>());
    } else {
      throw std::invalid_argument("bad id");
    }
  }
  return BuildArticle(std::move(id), RequireString(record, "url"),
                      RequireString(record, "region"),
                      RequireString(record, "title"),
                      RequireString(record, "body"),
                      RequireString(record, "published_at"));
}

std::string ExtractDomain(std::string_view url) {
  const std::string trimmed = Trim(url);
  std::string_view rest = trimmed;
  if (auto scheme = rest.find("://"); scheme != std::string_view::npos) {
    rest.remove_prefix(scheme + 3);
  } else if (rest.substr(0, 2) == "//") {
    rest.remove_prefix(2);
  }
  rest = rest.substr(0, rest.find_first_of("/?#"));
  if (auto at = rest.rfind('@'); at != std::string_view::npos) {
    rest.remove_prefix(at + 1);
  }
  rest = rest.substr(0, rest.find(':'));
  std::string host = AsciiLower(rest);
  while (!host.empty() && host.back() == '.') host.pop_back();
  if (host.rfind("www.", 0) == 0) host.erase(0, 4);
  return host;
}

CorpusFormat ParseCorpusFormat(std::string_view text) {
  const std::string f = AsciiLower(text);
  if (f == "jsonl") return CorpusFormat::kJsonl;
  if (f == "csv") return CorpusFormat::kCsv;
  throw std::invalid_argument("unknown corpus format: " + std::string(text));
}

IngestResult Ingest(const std::filesystem::path &path, CorpusFormat format) {
  IngestResult result;
  std::unordered_set<std::string> seen;
  auto skip = [&](size_t line, const std::string &why) {
    ++result.skipped;
    result.skip_reasons.push_back("record " + std::to_string(line) + ": " +
                                  why);
  };
  auto accept = [&](Article a, size_t line) {
    if (!seen.insert(a.id).second) {
      skip(line, "duplicate id " + a.id);
      return;
    }
    result.articles.push_back(std::move(a));
  };

  if (format == CorpusFormat::kJsonl) {
    ReadJsonl(
        path,
        [&](const json &record, size_t line) {
          try {
            accept(ArticleFromJson(record), line);
          } catch (const std::exception &e) {
            skip(line, e.what());
          }
        },
        skip);
    return result;
  }

  const auto rows = ParseCsv(ReadTextFile(path));
  if (rows.empty()) return result;
  std::map<std::string, size_t> column;
  for (size_t i = 0; i < rows[0].size(); ++i) {
    column[AsciiLower(Trim(rows[0][i]))] = i;
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto &row = rows[r];
    auto field = [&](const char *name) -> std::string {
      auto it = column.find(name);
      if (it == column.end() || it->second >= row.size()) return {};
      return row[it->second];
    };
    try {
      for (const char *name : {"url", "region", "title", "body",
                               "published_at"}) {
        if (!column.count(name) || column.at(name) >= row.size()) {
          throw std::invalid_argument(std::string("missing ") + name);
        }
      }
      accept(BuildArticle(field("id"), field("url"), field("region"),
                          field("title"), field("body"),
                          field("published_at")),
             r + 1);
    } catch (const std::exception &e) {
      skip(r + 1, e.what());
    }
  }
  return result;
}

void FilterConfig::Validate() const {
  if (low_trim_fraction < 0 || high_trim_fraction < 0 ||
      low_trim_fraction + high_trim_fraction >= 1) {
    throw std::invalid_argument(
        "trim fractions must be non-negative and sum to less than 1");
  }
  if (date_min > date_max) {
    throw std::invalid_argument("date_min is after date_max");
  }
}

FilterConfig FilterConfigFromJson(const json &value) {
  FilterConfig c;
  if (auto it = value.find("allowed_domains"); it != value.end()) {
    for (const auto &[region, domains] : it->items()) {
      auto &set = c.allowed_domains[ParseRegion(region)];
      for (const auto &d : domains) set.insert(AsciiLower(d.get<std::string>()));
    }
  }
  if (auto it = value.find("query_terms"); it != value.end()) {
    c.query_terms = it->get<std::vector<std::string>>();
  }
  if (auto it = value.find("exclusion_keyword_sets"); it != value.end()) {
    for (const auto &[name, terms] : it->items()) {
      c.exclusion_keyword_sets.emplace_back(
          name, terms.get<std::vector<std::string>>());
    }
  }
  if (auto it = value.find("date_min"); it != value.end()) {
    c.date_min = ParseIsoDateOrThrow(it->get<std::string>());
  }
  if (auto it = value.find("date_max"); it != value.end()) {
    c.date_max = ParseIsoDateOrThrow(it->get<std::string>());
  }
  c.low_trim_fraction = value.value("low_trim_fraction", c.low_trim_fraction);
  c.high_trim_fraction =
      value.value("high_trim_fraction", c.high_trim_fraction);
  c.trim_per_region = value.value("trim_per_region", c.trim_per_region);
  c.Validate();
  return c;
}

json FilterConfigToJson(const FilterConfig &c) {
  json domains = json::object();
  for (const auto &[region, set] : c.allowed_domains) {
    domains[std::string(RegionName(region))] = set;
  }
  json exclusions = json::object();
  for (const auto &[name, terms] : c.exclusion_keyword_sets) {
    exclusions[name] = terms;
  }
  return json{{"allowed_domains", domains},
              {"query_terms", c.query_terms},
              {"exclusion_keyword_sets", exclusions},
              {"date_min", FormatIsoDate(c.date_min)},
              {"date_max", FormatIsoDate(c.date_max)},
              {"low_trim_fraction", c.low_trim_fraction},
              {"high_trim_fraction", c.high_trim_fraction},
              {"trim_per_region", c.trim_per_region}};
}

namespace {

template <typename Pred>
FilterResult KeepIf(const std::vector<Article> &articles, Pred keep) {
  FilterResult result;
  for (const auto &a : articles) {
    if (keep(a)) {
      result.retained.push_back(a);
    } else {
      ++result.dropped;
    }
  }
  return result;
}

bool MatchesAny(std::string_view text, const std::vector<std::string> &terms) {
  return std::any_of(terms.begin(), terms.end(), [&](const std::string &t) {
    return ContainsPhrase(text, t);
  });
}

// Guards against n * 0.29 landing just below an integer.
size_t FloorCount(size_t n, double fraction) {
  return static_cast<size_t>(std::floor(static_cast<double>(n) * fraction +
                                        1e-9));
}

}  // namespace

FilterResult FilterDomain(const std::vector<Article> &articles,
                          const FilterConfig &config) {
  return KeepIf(articles, [&](const Article &a) {
    auto it = config.allowed_domains.find(a.region);
    return it != config.allowed_domains.end() && it->second.count(a.domain);
  });
}

FilterResult FilterKeywords(const std::vector<Article> &articles,
                            const std::vector<std::string> &query_terms) {
  if (query_terms.empty()) {
    throw std::invalid_argument("query_terms must not be empty");
  }
  return KeepIf(articles, [&](const Article &a) {
    return MatchesAny(a.title, query_terms) || MatchesAny(a.body, query_terms);
  });
}

FilterResult FilterTopicExclusion(
    const std::vector<Article> &articles,
    const std::vector<std::pair<std::string, std::vector<std::string>>>
        &exclusion_keyword_sets) {
  return KeepIf(articles, [&](const Article &a) {
    for (const auto &[name, terms] : exclusion_keyword_sets) {
      if (terms.empty()) continue;
      const bool all = std::all_of(
          terms.begin(), terms.end(),
          [&](const std::string &t) { return ContainsPhrase(a.title, t); });
      if (all) return false;
    }
    return true;
  });
}

FilterResult FilterDates(const std::vector<Article> &articles, Date date_min,
                         Date date_max) {
  return KeepIf(articles, [&](const Article &a) {
    return date_min <= a.published_at && a.published_at <= date_max;
  });
}

FilterResult TrimLengthPercentiles(const std::vector<Article> &articles,
                                   double low_frac, double high_frac) {
  if (low_frac < 0 || high_frac < 0 || low_frac + high_frac >= 1) {
    throw std::invalid_argument(
        "trim fractions must be non-negative and sum to less than 1");
  }
  const size_t n = articles.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const auto &a = articles[x];
    const auto &b = articles[y];
    if (a.token_count != b.token_count) return a.token_count < b.token_count;
    return a.id < b.id;
  });
  const size_t low = FloorCount(n, low_frac);
  const size_t high = FloorCount(n, high_frac);
  std::vector<bool> keep(n, false);
  for (size_t i = low; i + high < n; ++i) keep[order[i]] = true;

  FilterResult result;
  for (size_t i = 0; i < n; ++i) {
    if (keep[i]) {
      result.retained.push_back(articles[i]);
    } else {
      ++result.dropped;
    }
  }
  return result;
}

bool FilterReport::Reconciles() const {
  size_t dropped = 0;
  for (const auto &[stage, n] : dropped_by_stage) dropped += n;
  if (input_count != retained_count + dropped) return false;
  for (const auto &[region, in] : input_by_region) {
    size_t region_dropped = 0;
    for (const auto &[stage, by_region] : dropped_by_region) {
      if (auto it = by_region.find(region); it != by_region.end()) {
        region_dropped += it->second;
      }
    }
    auto kept = retained_by_region.find(region);
    const size_t kept_n = kept == retained_by_region.end() ? 0 : kept->second;
    if (in != kept_n + region_dropped) return false;
  }
  return true;
}

json FilterReport::ToJson() const {
  return json{
      {"note",
       "topic stage uses named conjunctive keyword-exclusion sets over "
       "titles in place of a neural topic model"},
      {"input_count", input_count},
      {"input_by_region", input_by_region},
      {"dropped_by_stage", dropped_by_stage},
      {"dropped_by_stage_and_region", dropped_by_region},
      {"retained_count", retained_count},
      {"retained_by_region", retained_by_region},
      {"reconciles", Reconciles()}};
}

namespace {

std::map<std::string, size_t> CountByRegion(const std::vector<Article> &v) {
  std::map<std::string, size_t> counts;
  for (const auto &a : v) ++counts[std::string(RegionName(a.region))];
  return counts;
}

}  // namespace

FilterResult RunFilters(const std::vector<Article> &articles,
                        const FilterConfig &config, FilterReport *report) {
  config.Validate();
  FilterReport local;
  FilterReport &r = report ? *report : local;
  r = FilterReport{};
  r.input_count = articles.size();
  r.input_by_region = CountByRegion(articles);
  for (auto stage : kFilterStages) r.dropped_by_stage[std::string(stage)] = 0;

  std::vector<Article> current = articles;
  auto apply = [&](std::string_view stage, FilterResult step) {
    auto before = CountByRegion(current);
    auto after = CountByRegion(step.retained);
    auto &by_region = r.dropped_by_region[std::string(stage)];
    for (const auto &[region, n] : before) {
      by_region[region] = n - (after.count(region) ? after.at(region) : 0);
    }
    r.dropped_by_stage[std::string(stage)] = step.dropped;
    current = std::move(step.retained);
  };

  apply("domain", FilterDomain(current, config));
  if (!config.query_terms.empty()) {
    apply("keyword", FilterKeywords(current, config.query_terms));
  }
  apply("topic", FilterTopicExclusion(current, config.exclusion_keyword_sets));
  apply("date", FilterDates(current, config.date_min, config.date_max));

  if (!current.empty()) {
    if (!config.trim_per_region) {
      apply("length", TrimLengthPercentiles(current, config.low_trim_fraction,
                                            config.high_trim_fraction));
    } else {
      // Trim each region on its own, then restore the input order.
      std::set<std::string> kept_ids;
      for (Region region : kAllRegions) {
        std::vector<Article> part;
        for (const auto &a : current) {
          if (a.region == region) part.push_back(a);
        }
        if (part.empty()) continue;
        for (auto &a : TrimLengthPercentiles(part, config.low_trim_fraction,
                                             config.high_trim_fraction)
                           .retained) {
          kept_ids.insert(a.id);
        }
      }
      FilterResult merged;
      for (const auto &a : current) {
        if (kept_ids.count(a.id)) {
          merged.retained.push_back(a);
        } else {
          ++merged.dropped;
        }
      }
      apply("length", std::move(merged));
    }
  }

  r.retained_count = current.size();
  r.retained_by_region = CountByRegion(current);
  FilterResult result;
  result.retained = std::move(current);
  result.dropped = articles.size() - result.retained.size();
  return result;
}

}  // namespace framescope
