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

// A 100-article corpus with a scripted chat endpoint for end-to-end runs.
//
// Article i (ids m000..m099) is in region US, UK, ME for i % 3 = 0, 1, 2.
// Script, keyed by i % 10:
//   0  classification reply is malformed (no JSON object)
//   3  classification reply is valid JSON with only unknown labels (invalid)
//   5  indicator reply is malformed (no JSON object)
// Every other indicator reply carries two grounded instances of each war
// kind; articles with i % 4 == 0 also carry one instance of each peace kind.

#ifndef FRAMESCOPE_TESTS_SUPPORT_MOCK_PIPELINE_H_
#define FRAMESCOPE_TESTS_SUPPORT_MOCK_PIPELINE_H_

#include <filesystem>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "framescope/io.h"
#include "framescope/taxonomy.h"
#include "support/mock_server.h"

namespace framescope::testing {

inline constexpr size_t kMockArticles = 100;

std::string MockArticleId(size_t i);
// Corpus records in id order.
std::vector<json> MockCorpusRecords();
void WriteRecords(const std::filesystem::path &path,
                  const std::vector<json> &records);

// Gold labels for every article, derived from the region.
std::vector<json> MockGoldRecords();

// Writes corpus.jsonl, gold.jsonl and config.json under `dir` (output goes to
// dir/out) and returns the config path. `corpus_records` defaults to
// MockCorpusRecords().
std::filesystem::path WriteMockPipeline(
    const std::filesystem::path &dir,
    const std::vector<json> &corpus_records = MockCorpusRecords());

class ScriptedResponder {
 public:
  explicit ScriptedResponder(const IndicatorInventory &inventory);

  MockReply operator()(const json &request);

  // Articles that were sent a malformed reply, per prompt kind.
  std::set<std::string> generic_malformed() const;
  std::set<std::string> indicator_malformed() const;
  size_t calls() const;

 private:
  MockReply Generic(size_t index);
  MockReply Indicator(size_t index);

  const IndicatorInventory &inventory_;
  mutable std::mutex mu_;
  std::set<std::string> generic_malformed_;
  std::set<std::string> indicator_malformed_;
  size_t calls_ = 0;
};

}  // namespace framescope::testing

#endif  // FRAMESCOPE_TESTS_SUPPORT_MOCK_PIPELINE_H_
