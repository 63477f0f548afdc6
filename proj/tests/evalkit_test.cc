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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "framescope/evalkit.h"
#include "support/oracles.h"
#include "support/test_util.h"

using namespace framescope;
using framescope::testing::DataDir;
using framescope::testing::SplitMix;

namespace {

const GenericInventory &Inventory() {
  static const GenericInventory inv = LoadTaxonomies(DataDir() / "taxonomy").generic;
  return inv;
}

const std::string kA = "Economic";
const std::string kB = "Political";
const std::string kC = "Morality";

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("single pair hand case") {
  auto r = Evaluate({{"1", {kA, kB}, {kB, kC}}}, Inventory());
  CHECK(r.samples.precision == 0.5);
  CHECK(r.samples.recall == 0.5);
  CHECK(r.non_zero_overlap_rate == 1.0);
  CHECK(r.micro.precision == 0.5);
  CHECK(r.micro.recall == 0.5);
  for (const auto &m : r.per_label) {
    if (m.label == kA) CHECK((m.tp == 0 && m.fn == 1 && m.fp == 0));
    if (m.label == kB) CHECK((m.tp == 1 && m.fn == 0 && m.fp == 0));
    if (m.label == kC) CHECK((m.tp == 0 && m.fn == 0 && m.fp == 1));
  }
  CHECK(r.per_label.size() == 14);
  CHECK_FALSE(r.flags.empty());
}

TEST_CASE("perfect predictions score 1 on every average") {
  std::vector<LabeledPair> pairs;
  const auto labels = Inventory().ScoredLabels(false);
  for (size_t i = 0; i < labels.size(); ++i) {
    pairs.push_back({std::to_string(i), {labels[i]}, {labels[i]}});
  }
  auto r = Evaluate(pairs, Inventory());
  for (const auto *a : {&r.micro, &r.macro, &r.weighted, &r.samples}) {
    CHECK(a->precision == 1.0);
    CHECK(a->recall == 1.0);
    CHECK(a->f1 == 1.0);
  }
  CHECK(r.flags.empty());
}

TEST_CASE("identical confusion counts make micro equal macro") {
  // Every label: one TP, one FP, one FN.
  std::vector<LabeledPair> pairs;
  const auto labels = Inventory().ScoredLabels(false);
  for (size_t i = 0; i < labels.size(); ++i) {
    const std::string &next = labels[(i + 1) % labels.size()];
    pairs.push_back({"tp" + std::to_string(i), {labels[i]}, {labels[i]}});
    pairs.push_back({"x" + std::to_string(i), {labels[i]}, {next}});
  }
  auto r = Evaluate(pairs, Inventory());
  CHECK(r.micro.precision == r.macro.precision);
  CHECK(r.micro.recall == r.macro.recall);
  CHECK(r.micro.f1 == r.macro.f1);
  CHECK(r.micro.precision == 0.5);
}

TEST_CASE("matches the brute-force oracle") {
  SplitMix rng(20231007);
  const auto labels = Inventory().ScoredLabels(false);
  for (int trial = 0; trial < 200; ++trial) {
    auto pairs = framescope::testing::RandomPairs(&rng, labels, 10);
    auto report = Evaluate(pairs, Inventory());
    auto oracle = framescope::testing::OracleEvaluate(pairs, labels);
    INFO("trial " << trial);
    CHECK(framescope::testing::CompareMetrics(report, oracle, 1e-12) == "");
  }
}

TEST_CASE("None is scored only when asked") {
  std::vector<LabeledPair> pairs = {{"1", {"None"}, {"None"}},
                                    {"2", {kA}, {"None"}}};
  auto excluded = Evaluate(pairs, Inventory());
  CHECK(excluded.per_label.size() == 14);
  CHECK(excluded.pairs_with_gold == 1);
  auto included = Evaluate(pairs, Inventory(), {true});
  CHECK(included.per_label.size() == 15);
  CHECK(included.pairs_with_gold == 2);
  const auto labels = Inventory().ScoredLabels(true);
  CHECK(framescope::testing::CompareMetrics(
            included, framescope::testing::OracleEvaluate(pairs, labels),
            1e-12) == "");
}

TEST_CASE("pair order does not change the report") {
  SplitMix rng(7);
  const auto labels = Inventory().ScoredLabels(false);
  auto pairs = framescope::testing::RandomPairs(&rng, labels, 10);
  const std::string first = MetricReportToJson(Evaluate(pairs, Inventory())).dump();
  for (int i = 0; i < 5; ++i) {
    rng.Shuffle(&pairs);
    CHECK(MetricReportToJson(Evaluate(pairs, Inventory())).dump() == first);
  }
}

TEST_CASE("unknown labels and empty input are rejected") {
  CHECK_THROWS_AS(Evaluate({}, Inventory()), std::invalid_argument);
  try {
    Evaluate({{"1", {"Sports"}, {kA}}}, Inventory());
    FAIL("expected a throw");
  } catch (const std::exception &e) {
    CHECK(std::string(e.what()).find("Sports") != std::string::npos);
  }
}

TEST_CASE("gold records map to canonical labels") {
  const auto &inv = Inventory();
  auto labels = GoldLabelsFromRecord(
      json{{"article_id", "1"}, {"annotations", {"Legality", "Crime"}}},
      GoldFormat::kMfc, inv);
  CHECK(labels == std::set<std::string>{
                      "Legality, constitutionality and jurisprudence",
                      "Crime and punishment"});
  auto codes = GoldLabelsFromRecord(
      json::parse(R"({"annotations": {"framing": {"a1": [{"code": "7.0"}],
                                                  "a2": [{"code": "13.0"}, {"code": 7}]}}})"),
      GoldFormat::kMfc, inv);
  CHECK(codes == std::set<std::string>{"Crime and punishment", "Political"});
  CHECK(GoldLabelsFromRecord(json{{"annotations", json::array()}},
                             GoldFormat::kMfc, inv)
            .empty());
  CHECK(GoldLabelsFromRecord(json{{"labels", {"Political", "political"}}},
                             GoldFormat::kLabels, inv) ==
        std::set<std::string>{"Political"});
  try {
    GoldLabelsFromRecord(json{{"labels", {"Weather"}}}, GoldFormat::kLabels,
                         inv);
    FAIL("expected a throw");
  } catch (const std::exception &e) {
    CHECK(std::string(e.what()).find("Weather") != std::string::npos);
  }
}

TEST_CASE("gold file loading and pairing") {
  framescope::testing::TempDir dir("gold");
  {
    std::ofstream out(dir / "gold.jsonl");
    out << R"({"article_id": "a", "labels": ["Political"]})" << "\n"
        << R"({"article_id": "a", "labels": ["Economic"]})" << "\n"
        << R"({"article_id": "b", "labels": []})" << "\n"
        << R"({"article_id": "c", "labels": ["Morality"]})" << "\n";
  }
  auto gold = LoadGold(dir / "gold.jsonl", GoldFormat::kLabels, Inventory());
  REQUIRE(gold.size() == 3);
  CHECK(gold["a"] == std::set<std::string>{"Economic", "Political"});
  CHECK(gold["b"].empty());

  GenericFrameAssignment pa;
  pa.article_id = "a";
  pa.frames = {"Political"};
  pa.valid = true;
  GenericFrameAssignment pd;
  pd.article_id = "d";
  pd.frames = {"Economic"};
  pd.valid = true;
  auto paired = PairLabels(gold, {pa, pd});
  CHECK(paired.pairs.size() == 1);
  CHECK(paired.missing_prediction == 2);
  CHECK(paired.missing_gold == 1);

  {
    std::ofstream out(dir / "bad.jsonl");
    out << R"({"article_id": "a", "labels": ["Bogus frame"]})" << "\n";
  }
  CHECK_THROWS_WITH_AS(
      LoadGold(dir / "bad.jsonl", GoldFormat::kLabels, Inventory()),
      doctest::Contains("Bogus frame"), std::invalid_argument);
  CHECK(ParseGoldFormat("mfc") == GoldFormat::kMfc);
  CHECK_THROWS(ParseGoldFormat("xml"));
}

TEST_CASE("metric table layout") {
  auto r = Evaluate({{"1", {kA, kB}, {kB, kC}}}, Inventory());
  auto lines = Lines(FormatMetricTable(r, Inventory()));
  // Header, rule, 14 labels, rule, 4 averages.
  REQUIRE(lines.size() == 21);
  CHECK(lines[0].rfind("Label", 0) == 0);
  CHECK(lines[0].find("Precision") != std::string::npos);
  CHECK(lines[2].rfind("cap&res ", 0) == 0);
  bool saw_political = false;
  for (const auto &l : lines) {
    if (l.rfind("political ", 0) == 0) {
      saw_political = true;
      CHECK(l.find("1.00") != std::string::npos);
    }
  }
  CHECK(saw_political);
  CHECK(lines[17].rfind("micro avg", 0) == 0);
  CHECK(lines[20].rfind("samples avg", 0) == 0);
  CHECK(lines[20].find("0.50") != std::string::npos);
  for (const auto &l : lines) CHECK(l.size() == lines[0].size());
}

TEST_CASE("report json carries flags and counts") {
  auto j = MetricReportToJson(Evaluate({{"1", {kA, kB}, {kB, kC}}}, Inventory()));
  CHECK(j.contains("micro"));
  CHECK(j.contains("flags"));
  CHECK(j["pair_count"] == 1);
}
