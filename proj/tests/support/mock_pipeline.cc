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

#include "support/mock_pipeline.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "framescope/date.h"
#include "support/test_util.h"

namespace framescope::testing {
namespace {

namespace fs = std::filesystem;

constexpr const char *kRegions[] = {"US", "UK", "ME"};
constexpr const char *kDomains[] = {"cnn.com", "bbc.co.uk", "aljazeera.com"};
constexpr const char *kElite[] = {
    "President Biden spoke with Netanyahu",
    "The prime minister urged restraint",
    "The foreign minister of Qatar met negotiators"};
constexpr const char *kWar1 = "Hamas attacked the kibbutz";
constexpr const char *kWar2 = "Israeli warplanes struck the camp";
constexpr const char *kPeace = "Aid groups called for a ceasefire";
constexpr const char *kPeople = "Residents described the night as terrifying";
constexpr const char *kFiller[] = {
    "Witnesses reported more shelling in the city.",
    "The death toll rose again on Tuesday.",
    "Officials said the border crossing stayed closed.",
    "Doctors warned of disease in crowded shelters.",
    "A ground offensive was expected within days.",
    "Families searched the rubble for relatives.",
    "Hundreds of people fled south overnight."};

const char *kMarker = "Reference code ";

std::string DateFor(size_t i) {
  using namespace std::chrono;
  const sys_days start = sys_days{year{2023} / October / 7};
  return FormatIsoDate(year_month_day{start + days{(i * 37) % 140}});
}

std::string BodyFor(size_t i) {
  const size_t r = i % 3;
  std::string body = std::string(kMarker) + MockArticleId(i) + ". ";
  body += std::string(kWar1) + " near Gaza. ";
  body += std::string(kWar2) + ". ";
  body += std::string(kElite[r]) + ". ";
  body += std::string(kPeace) + ". ";
  body += std::string(kPeople) + ". ";
  body += "Families feared for their children.";
  const size_t filler = (i * 7) % 23;
  for (size_t k = 0; k < filler; ++k) {
    body += " ";
    body += kFiller[(i + k) % std::size(kFiller)];
  }
  return body;
}

// (kind path tail) -> nested object path inside the polarity root.
void Put(json *root, const std::string &path, json value) {
  json *node = root;
  size_t start = path.find('.') + 1;
  while (true) {
    const size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (dot == std::string::npos) {
      (*node)[key] = std::move(value);
      return;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

json Entry(const IndicatorKind &kind, const std::string &excerpt,
           const std::string &target) {
  if (!kind.has_target && !kind.has_reasoning) return excerpt;
  return json::array({excerpt, kind.has_target ? json(target) : json(nullptr),
                      kind.has_reasoning ? json("scripted") : json(nullptr)});
}

}  // namespace

std::string MockArticleId(size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "m%03zu", i);
  return buf;
}

std::vector<json> MockCorpusRecords() {
  std::vector<json> out;
  for (size_t i = 0; i < kMockArticles; ++i) {
    const size_t r = i % 3;
    out.push_back({{"id", MockArticleId(i)},
                   {"url", std::string("https://www.") + kDomains[r] +
                               "/news/" + MockArticleId(i)},
                   {"region", kRegions[r]},
                   {"title", "Gaza war update " + MockArticleId(i)},
                   {"body", BodyFor(i)},
                   {"published_at", DateFor(i)}});
  }
  return out;
}

void WriteRecords(const fs::path &path, const std::vector<json> &records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto &r : records) out << r.dump() << "\n";
}

std::vector<json> MockGoldRecords() {
  static const std::vector<std::vector<std::string>> kGold = {
      {"Political", "Security and defense"},
      {"Political", "External regulation and reputation"},
      {"Health and safety", "Quality of life"}};
  std::vector<json> out;
  for (size_t i = 0; i < kMockArticles; ++i) {
    out.push_back({{"article_id", MockArticleId(i)}, {"labels", kGold[i % 3]}});
  }
  return out;
}

fs::path WriteMockPipeline(const fs::path &dir,
                           const std::vector<json> &corpus_records) {
  fs::create_directories(dir);
  WriteRecords(dir / "corpus.jsonl", corpus_records);
  WriteRecords(dir / "gold.jsonl", MockGoldRecords());
  const fs::path data = DataDir();
  json config = {
      {"paths",
       {{"corpus", "corpus.jsonl"},
        {"taxonomy_dir", (data / "taxonomy").string()},
        {"lexicon", (data / "lexicon.json").string()},
        {"gazetteer", (data / "gazetteer.json").string()},
        {"stopwords", (data / "stopwords.txt").string()},
        {"abbreviations", (data / "abbreviations.txt").string()},
        {"output_dir", "out"},
        {"gold", "gold.jsonl"}}},
      {"filter",
       {{"allowed_domains",
         {{"US", {"cnn.com"}}, {"UK", {"bbc.co.uk"}}, {"ME", {"aljazeera.com"}}}},
        {"query_terms", {"Israel", "Gaza", "Hamas"}},
        {"exclusion_keyword_sets", {{"sports", {"football", "match"}}}},
        {"date_min", "2023-10-07"},
        {"date_max", "2024-02-29"}}},
      {"endpoint",
       {{"model", "mock-model"}, {"max_attempts", 2}, {"initial_backoff_ms", 10}}},
      {"concurrency", 4}};
  std::ofstream(dir / "config.json") << config.dump(2) << "\n";
  return dir / "config.json";
}

ScriptedResponder::ScriptedResponder(const IndicatorInventory &inventory)
    : inventory_(inventory) {}

MockReply ScriptedResponder::operator()(const json &request) {
  const std::string user =
      request.at("messages").at(1).at("content").get<std::string>();
  const size_t at = user.find(kMarker);
  if (at == std::string::npos) return {400, "no article marker"};
  const size_t index =
      std::stoul(user.substr(at + std::char_traits<char>::length(kMarker) + 1, 3));
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++calls_;
  }
  if (user.find("war_journalism_indicators") != std::string::npos) {
    return Indicator(index);
  }
  return Generic(index);
}

MockReply ScriptedResponder::Generic(size_t i) {
  static const std::vector<std::vector<std::string>> kFrames = {
      {"Political", "Security and defense"},
      {"Political", "Morality"},
      {"Health and safety", "Security and defense"}};
  if (i % 10 == 0) {
    std::lock_guard<std::mutex> lock(mu_);
    generic_malformed_.insert(MockArticleId(i));
    return {200, "I am unable to classify this article."};
  }
  if (i % 10 == 3) {
    return {200, R"({"frames-list": ["Sports coverage"], "reason": "n/a"})"};
  }
  return {200, json{{"frames-list", kFrames[i % 3]},
                    {"reason", "scripted reply"}}
                   .dump()};
}

MockReply ScriptedResponder::Indicator(size_t i) {
  if (i % 10 == 5) {
    std::lock_guard<std::mutex> lock(mu_);
    indicator_malformed_.insert(MockArticleId(i));
    return {200, "The article contains several indicators (see above)."};
  }
  const size_t r = i % 3;
  const std::string target_a = r == 2 ? "Israel" : "Hamas";
  const std::string target_b = r == 2 ? "Israeli government"
                               : r == 1 ? "Hamas militants"
                                        : "the Hamas";
  json doc = {{"war_journalism_indicators", json::object()},
              {"peace_journalism_indicator", json::object()}};
  for (const auto &kind : inventory_.kinds()) {
    json &root = doc[std::string(ScaffoldRootKey(kind.polarity))];
    if (kind.polarity == Polarity::kWar) {
      const std::string first =
          kind.path == "war.focus_on_elites" ? kElite[r] : kWar1;
      Put(&root, kind.path,
          json::array({Entry(kind, first, target_a),
                       Entry(kind, kWar2, target_b)}));
    } else if (i % 4 == 0) {
      const std::string excerpt =
          kind.path == "peace.people_orientation" ? kPeople : kPeace;
      Put(&root, kind.path, json::array({Entry(kind, excerpt, "civilians")}));
    }
  }
  return {200, doc.dump()};
}

std::set<std::string> ScriptedResponder::generic_malformed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return generic_malformed_;
}

std::set<std::string> ScriptedResponder::indicator_malformed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return indicator_malformed_;
}

size_t ScriptedResponder::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_;
}

}  // namespace framescope::testing
