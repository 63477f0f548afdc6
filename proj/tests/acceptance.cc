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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "framescope/analytics.h"
#include "framescope/corpus.h"
#include "framescope/evalkit.h"
#include "framescope/grounding.h"
#include "framescope/pipeline.h"
#include "framescope/semframe.h"
#include "support/fixtures.h"
#include "support/mock_pipeline.h"
#include "support/mock_server.h"
#include "support/oracles.h"
#include "support/test_util.h"

using namespace framescope;
using framescope::testing::DataDir;
using framescope::testing::MockChatServer;
using framescope::testing::ReadFile;
using framescope::testing::ScriptedResponder;
using framescope::testing::SplitMix;
using framescope::testing::TempDir;

namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

const Taxonomies &Tax() {
  static const Taxonomies tax = LoadTaxonomies(DataDir() / "taxonomy");
  return tax;
}

const Lexicon &StockLexicon() {
  static const Lexicon lex = LoadLexicon(DataDir() / "lexicon.json", Tax().frames);
  return lex;
}

const Gazetteer &StockGazetteer() {
  static const Gazetteer g = LoadGazetteer(DataDir() / "gazetteer.json");
  return g;
}

json ReadJson(const fs::path &path) { return json::parse(ReadFile(path)); }

double Sum(const Shares &shares) {
  double total = 0.0;
  for (const auto &[key, value] : shares) total += value;
  return total;
}

// Worst |sum - 1| over non-empty share objects; 0 when all are empty.
double ShareError(const json &shares) {
  if (!shares.is_object() || shares.empty()) return 0.0;
  double total = 0.0;
  for (const auto &[key, value] : shares.items()) total += value.get<double>();
  return std::fabs(total - 1.0);
}

Verdict EvalkitOracle() {
  SplitMix rng(1007);
  const auto labels = Tax().generic.ScoredLabels(false);
  const auto start = std::chrono::steady_clock::now();
  size_t mismatches = 0;
  std::string first;
  for (int trial = 0; trial < 25; ++trial) {
    auto pairs = framescope::testing::RandomPairs(&rng, labels, 10);
    const std::string diff = framescope::testing::CompareMetrics(
        Evaluate(pairs, Tax().generic),
        framescope::testing::OracleEvaluate(pairs, labels), 1e-12);
    if (!diff.empty()) {
      ++mismatches;
      if (first.empty()) first = diff;
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::ostringstream out;
  out << "25 fixtures over " << labels.size() << " labels, " << mismatches
      << " mismatches at 1e-12, " << seconds << " s";
  if (!first.empty()) out << "; " << first;
  return {mismatches == 0 && labels.size() == 14 && seconds < 1.0, out.str()};
}

Verdict EvalkitHandCase() {
  auto r = Evaluate({{"1", {"Economic", "Political"}, {"Political", "Morality"}}},
                    Tax().generic);
  std::ostringstream out;
  out << "samples P=" << r.samples.precision << " R=" << r.samples.recall
      << " overlap=" << r.non_zero_overlap_rate;
  return {r.samples.precision == 0.5 && r.samples.recall == 0.5 &&
              r.non_zero_overlap_rate == 1.0,
          out.str()};
}

Verdict Trim() {
  std::vector<Article> articles;
  for (size_t len = 1; len <= 1000; ++len) {
    Article a;
    char id[16];
    std::snprintf(id, sizeof(id), "t%04zu", len);
    a.id = id;
    a.token_count = len;
    articles.push_back(a);
  }
  SplitMix rng(31);
  rng.Shuffle(&articles);
  auto result = TrimLengthPercentiles(articles, 0.01, 0.05);

  auto sorted = articles;
  std::sort(sorted.begin(), sorted.end(), [](const Article &x, const Article &y) {
    return x.token_count < y.token_count;
  });
  const size_t low = static_cast<size_t>(std::floor(0.01 * sorted.size()));
  const size_t high = static_cast<size_t>(std::floor(0.05 * sorted.size()));
  std::set<size_t> oracle;
  for (size_t i = low; i < sorted.size() - high; ++i) {
    oracle.insert(sorted[i].token_count);
  }
  std::set<size_t> got;
  for (const auto &a : result.retained) got.insert(a.token_count);
  const bool range = !got.empty() && *got.begin() == 11 && *got.rbegin() == 950;
  std::ostringstream out;
  out << "retained " << result.retained.size() << " (lengths "
      << (got.empty() ? 0 : *got.begin()) << ".."
      << (got.empty() ? 0 : *got.rbegin()) << "), oracle "
      << (got == oracle ? "agrees" : "disagrees");
  return {result.retained.size() == 940 && got.size() == 940 && range &&
              got == oracle,
          out.str()};
}

Verdict Grounding() {
  const auto &cases = framescope::testing::GroundingCases();
  size_t correct = 0, false_positives = 0, misses = 0;
  for (size_t i = 0; i < cases.size(); ++i) {
    const bool got =
        GroundExcerpt(cases[i].excerpt, framescope::testing::GroundingBody()).grounded;
    const bool want = i < 20;
    if (got == want) ++correct;
    if (got && !want) ++false_positives;
    if (!got && want) ++misses;
  }
  std::ostringstream out;
  out << correct << "/" << cases.size() << " as expected, " << false_positives
      << " false positives, " << misses << " misses";
  return {cases.size() == 30 && correct == 30, out.str()};
}

Verdict Tagger() {
  const auto &cases = framescope::testing::TaggerCases();
  size_t tp = 0, fp = 0, fn = 0, role_sentences = 0, role_ok = 0;
  for (const auto &c : cases) {
    const Sentence s{c.sentence, 0, c.sentence.size()};
    auto occ = TagSentence(s, StockLexicon());
    std::multiset<std::pair<std::string, std::string>> got, want;
    for (const auto &o : occ) got.emplace(o.frame_name, o.trigger.text);
    for (const auto &t : c.triggers) want.emplace(t.frame, t.trigger);
    for (const auto &g : got) {
      if (want.count(g)) {
        ++tp;
      } else {
        ++fp;
      }
    }
    for (const auto &w : want) {
      if (!got.count(w)) ++fn;
    }
    if (c.roles.empty()) continue;
    ++role_sentences;
    bool all = true;
    for (const auto &label : c.roles) {
      bool found = false;
      for (const auto &o : occ) {
        if (o.trigger.text != label.trigger) continue;
        found = true;
        auto r = ExtractRoles(o, s, StockGazetteer(), Tax().frames);
        auto text = [&](const char *role) {
          auto it = r.roles.find(role);
          return it == r.roles.end() ? std::string() : it->second.text;
        };
        if (text("Assailant") != label.assailant || text("Victim") != label.victim) {
          all = false;
        }
      }
      if (!found) all = false;
    }
    if (all) ++role_ok;
  }
  const double p = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
  const double r = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
  std::ostringstream out;
  out << cases.size() << " sentences, precision " << p << ", recall " << r
      << ", roles " << role_ok << "/" << role_sentences;
  return {cases.size() == 50 && p == 1.0 && r == 1.0 && role_sentences == 20 &&
              role_ok == 20,
          out.str()};
}

// Runs every stage on `records` with the scripted endpoint and returns the
// aggregate directory contents by file name.
std::map<std::string, std::string> AggregateOutputs(
    const std::vector<json> &records, int concurrency) {
  TempDir dir("accept_det");
  ScriptedResponder responder(Tax().indicators);
  MockChatServer server([&](const json &r) { return responder(r); });
  auto config = LoadPipelineConfig(
      framescope::testing::WriteMockPipeline(dir.path(), records));
  config.concurrency = concurrency;
  config.endpoint.max_in_flight = concurrency;
  RunOptions options;
  options.mock_endpoint = server.base_url();
  Pipeline p(config, options);
  p.RunAll();
  std::map<std::string, std::string> files;
  for (const auto &entry : fs::directory_iterator(p.ArtifactPath("aggregate"))) {
    files[entry.path().filename().string()] = ReadFile(entry.path());
  }
  return files;
}

Verdict Determinism() {
  const auto base = AggregateOutputs(framescope::testing::MockCorpusRecords(), 1);
  SplitMix rng(5);
  size_t runs = 1, differing = 0;
  std::set<std::string> bad;
  for (int order = 0; order < 5; ++order) {
    auto records = framescope::testing::MockCorpusRecords();
    rng.Shuffle(&records);
    for (int concurrency : {1, 4, 16}) {
      const auto files = AggregateOutputs(records, concurrency);
      ++runs;
      if (files != base) {
        ++differing;
        for (const auto &[name, text] : base) {
          auto it = files.find(name);
          if (it == files.end() || it->second != text) bad.insert(name);
        }
      }
    }
  }
  std::ostringstream out;
  out << runs << " runs (5 shuffled orders x concurrency 1/4/16 plus id order), "
      << base.size() << " aggregate files, " << differing << " runs differ";
  for (const auto &name : bad) out << " " << name;
  return {differing == 0 && base.size() > 0, out.str()};
}

struct EndToEnd {
  Verdict verdict;
  // Share-sum checks over the run's outputs, reused by the analytics check.
  double share_error = 0.0;
  size_t share_mappings = 0;
};

EndToEnd RunEndToEnd() {
  TempDir dir("accept_e2e");
  ScriptedResponder responder(Tax().indicators);
  MockChatServer server([&](const json &r) { return responder(r); });
  RunOptions options;
  options.mock_endpoint = server.base_url();
  Pipeline p(LoadPipelineConfig(framescope::testing::WriteMockPipeline(dir.path())),
             options);
  auto outcomes = p.RunAll();

  EndToEnd e;
  std::ostringstream out;
  bool ok = outcomes.size() == 8;
  for (const auto &o : outcomes) ok = ok && !o.skipped && o.endpoint_failures == 0;

  const auto classify = ReadJson(p.ArtifactPath("classify/audit.json"));
  const auto extract = ReadJson(p.ArtifactPath("extract/audit.json"));
  const size_t generic_bad = classify["malformed"].get<size_t>();
  const size_t indicator_bad = extract["malformed"].get<size_t>();
  const size_t scripted =
      responder.generic_malformed().size() + responder.indicator_malformed().size();
  ok = ok && generic_bad == responder.generic_malformed().size() &&
       indicator_bad == responder.indicator_malformed().size() && scripted > 0;
  out << "stages " << outcomes.size() << ", malformed audited "
      << generic_bad + indicator_bad << " of " << scripted << " scripted ("
      << responder.calls() << " calls, "
      << 100.0 * scripted / std::max<size_t>(1, responder.calls()) << "%)";

  const auto rates = ReadJson(p.ArtifactPath("aggregate/indicator_rate.json"));
  std::set<std::string> war, peace;
  for (const auto &kind : Tax().indicators.kinds()) {
    (kind.polarity == Polarity::kWar ? war : peace).insert(kind.path);
  }
  out << "; mean war/peace rate";
  size_t regions = 0;
  for (const auto &[region, by_kind] : rates["rates"].items()) {
    ++regions;
    double min_war = 1e300, max_peace = 0.0, war_sum = 0.0, peace_sum = 0.0;
    for (const auto &path : war) {
      const double v = by_kind.value(path, 0.0);
      min_war = std::min(min_war, v);
      war_sum += v;
    }
    for (const auto &path : peace) {
      const double v = by_kind.value(path, 0.0);
      max_peace = std::max(max_peace, v);
      peace_sum += v;
    }
    const double war_mean = war_sum / war.size();
    const double peace_mean = peace_sum / peace.size();
    ok = ok && min_war > max_peace && war_mean > peace_mean;
    out << " " << region << " " << war_mean << "/" << peace_mean;
  }
  ok = ok && regions == 3;

  auto note = [&](double err) {
    e.share_error = std::max(e.share_error, err);
    ++e.share_mappings;
  };
  for (const auto &r : ReadJson(p.ArtifactPath("aggregate/region_aggregates.json"))["regions"]) {
    note(ShareError(r["generic_frame_share"]));
    note(ShareError(r["frame_share"]));
    for (const auto &role : r["role_distribution"]) note(ShareError(role["groups"]));
  }
  for (const auto &[region, scopes] :
       ReadJson(p.ArtifactPath("aggregate/frame_share.json")).items()) {
    if (region == "_header") continue;
    for (const auto &[scope, shares] : scopes.items()) note(ShareError(shares));
  }
  e.verdict = {ok, out.str()};
  return e;
}

Verdict Analytics(const EndToEnd &e2e) {
  SplitMix rng(2024);
  std::vector<std::string> names;
  for (const auto &f : Tax().frames.frames()) names.push_back(f.name);
  size_t mismatches = 0;
  double worst = e2e.share_error;
  size_t mappings = e2e.share_mappings;
  const auto labels = Tax().generic.labels();
  for (int trial = 0; trial < 25; ++trial) {
    auto occ = framescope::testing::RandomOccurrences(&rng, names, 20);
    for (auto scope : {CooccurrenceScope::kArticle, CooccurrenceScope::kSentence}) {
      if (Cooccurrence(occ, Tax().frames, scope).cells !=
          framescope::testing::OracleCooccurrence(occ, names, scope)) {
        ++mismatches;
      }
    }
    auto check = [&](const Shares &s) {
      if (s.empty()) return;
      worst = std::max(worst, std::fabs(Sum(s) - 1.0));
      ++mappings;
    };
    for (auto scope : {EffectScope::kAll, EffectScope::kVisible, EffectScope::kInvisible}) {
      check(FrameShare(occ, Tax().frames, scope));
    }
    for (const char *role : {"Assailant", "Victim"}) {
      check(RoleDistribution(occ, StockGazetteer(), "", role));
    }
    std::vector<GenericFrameAssignment> assignments;
    const size_t n = 1 + rng.Below(20);
    for (size_t i = 0; i < n; ++i) {
      GenericFrameAssignment a;
      a.article_id = "g" + std::to_string(i);
      const size_t k = 1 + rng.Below(3);
      for (size_t j = 0; j < k; ++j) a.frames.push_back(labels[rng.Below(labels.size())]);
      assignments.push_back(a);
    }
    check(GenericFrameShare(assignments));
  }

  std::vector<IndicatorInstance> hamas;
  for (const char *t : {"Hamas", "Hamas militants", "the Hamas"}) {
    IndicatorInstance inst;
    inst.article_id = "a";
    inst.kind_path = "war.language.demonizing_language";
    inst.excerpt = "x";
    inst.target = t;
    hamas.push_back(inst);
  }
  const auto clusters = ClusterTargets(hamas, "US");
  const bool merged = clusters.size() == 1 && clusters[0].count == 3;

  std::ostringstream out;
  out << "co-occurrence mismatches " << mismatches << "/50, " << mappings
      << " share mappings, max |sum-1| " << worst << ", Hamas fixture -> "
      << clusters.size() << " cluster(s) of count "
      << (clusters.empty() ? 0 : clusters[0].count);
  return {mismatches == 0 && worst <= 1e-9 && mappings > 0 && merged, out.str()};
}

Verdict TableShape() {
  const std::vector<std::string> elites = {
      "President Biden said the war must end", "the president met Netanyahu",
      "Biden and Netanyahu spoke", "the president warned"};
  const std::vector<std::string> people = {"families fled their homes",
                                           "families mourned",
                                           "children and families waited"};
  const std::set<std::string> stopwords = {"the", "and", "said", "must", "their"};
  const auto us = TopWords(elites, 3, stopwords);
  const auto uk = TopWords(people, 3, stopwords);
  const WordCounts want_us = {{"president", 3}, {"biden", 2}, {"netanyahu", 2}};
  const WordCounts want_uk = {{"families", 3}, {"children", 1}, {"fled", 1}};
  const std::string table = FormatWordCountTable({{"US elites", us}, {"UK people", uk}});
  const std::string want_table =
      "     US elites |     UK people\n"
      "(president, 3) | (families, 3)\n"
      "    (biden, 2) | (children, 1)\n"
      "(netanyahu, 2) |     (fled, 1)\n";
  std::ostringstream out;
  out << "counts " << (us == want_us && uk == want_uk ? "match" : "differ")
      << ", table " << (table == want_table ? "matches" : "differs");
  if (table != want_table) out << ":\n" << table;
  return {us == want_us && uk == want_uk && table == want_table, out.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char *name, const std::function<Verdict()> &fn) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail
              << std::endl;
  };

  report("evalkit oracle equivalence", EvalkitOracle);
  report("evalkit hand case", EvalkitHandCase);
  report("length trim", Trim);
  report("excerpt grounding", Grounding);
  report("lexicon tagger and roles", Tagger);
  report("aggregate determinism", Determinism);
  EndToEnd e2e;
  report("end-to-end mock run", [&] {
    e2e = RunEndToEnd();
    return e2e.verdict;
  });
  report("analytics oracles", [&] { return Analytics(e2e); });
  report("word count table", TableShape);
  return failures == 0 ? 0 : 1;
}
