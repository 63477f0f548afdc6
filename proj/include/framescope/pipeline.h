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

// Stage orchestration. Each stage reads the artifacts of earlier stages from
// the output directory and writes its own:
//
//   ingest             ingest/articles.jsonl
//   filter             filter/filtered.jsonl, filter/filter_report.json
//   classify-generic   classify/assignments.jsonl
//   extract-indicators extract/instances.jsonl, extract/status.jsonl
//   tag-frames         tag/occurrences.jsonl
//   aggregate          aggregate/*.json, aggregate/*.csv, aggregate/*.txt
//   eval               eval/metrics.json, eval/metrics_table.txt
//   report             report/*.svg, report/*.txt
//
// Every stage also writes <stage>/audit.json and updates manifest.json. Each
// artifact carries the manifest hash: a "_header" line in JSONL, a "_header"
// key in JSON, a leading "# manifest_hash=" line in CSV and text, and SVG
// metadata. The hash covers only settings that change results, so rerunning
// with a different concurrency bound or input location reproduces the same
// bytes.

#ifndef FRAMESCOPE_PIPELINE_H_
#define FRAMESCOPE_PIPELINE_H_

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "framescope/analytics.h"
#include "framescope/chat_client.h"
#include "framescope/corpus.h"
#include "framescope/evalkit.h"
#include "framescope/io.h"
#include "framescope/prompts.h"
#include "framescope/semframe.h"
#include "framescope/taxonomy.h"

namespace framescope {

// Bad configuration or arguments (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stage was asked to run before the stage producing its input (exit 2).
class UpstreamMissingError : public std::runtime_error {
 public:
  UpstreamMissingError(const std::string &stage, const std::string &needed,
                       const std::filesystem::path &path);
  const std::string &needed_stage() const { return needed_; }

 private:
  std::string needed_;
};

enum class Stage {
  kIngest,
  kFilter,
  kClassifyGeneric,
  kExtractIndicators,
  kTagFrames,
  kAggregate,
  kEval,
  kReport,
};

inline constexpr Stage kAllStages[] = {
    Stage::kIngest,    Stage::kFilter,    Stage::kClassifyGeneric,
    Stage::kExtractIndicators, Stage::kTagFrames, Stage::kAggregate,
    Stage::kEval,      Stage::kReport};

std::string_view StageName(Stage stage);
// Throws ConfigError for an unknown name.
Stage ParseStage(std::string_view name);

struct PipelinePaths {
  std::filesystem::path corpus;
  CorpusFormat corpus_format = CorpusFormat::kJsonl;
  std::filesystem::path taxonomy_dir;
  std::filesystem::path lexicon;
  std::filesystem::path gazetteer;
  std::filesystem::path stopwords;
  std::filesystem::path abbreviations;
  std::filesystem::path cache_dir;
  std::filesystem::path output_dir;
  // Optional: gold labels for the eval stage.
  std::filesystem::path gold;
  GoldFormat gold_format = GoldFormat::kLabels;
  // Optional: occurrence JSONL from an external frame parser.
  std::filesystem::path external_occurrences;
};

struct AnalysisOptions {
  CooccurrenceScope cooccurrence_scope = CooccurrenceScope::kArticle;
  RateVariant rate_variant = RateVariant::kMeanOfRates;
  // Tag titles instead of bodies.
  bool headline_scope = false;
  OccurrenceSource occurrence_source = OccurrenceSource::kLexicon;
  bool eval_include_none = false;
  size_t top_k = 10;
  size_t max_clusters = 15;
  TimeBin time_bin = TimeBin::kWeek;
  std::vector<std::string> target_kinds = {
      "war.language.demonizing_language",
      "war.language.dehumanizing_language"};
  std::vector<std::string> elite_kinds = {"war.focus_on_elites"};
  std::vector<std::string> people_kinds = {"peace.people_orientation"};
};

struct PipelineConfig {
  PipelinePaths paths;
  FilterConfig filter;
  EndpointConfig endpoint;
  PromptOptions prompt;
  // Stages run by run-all; ingest, filter and aggregate always run.
  std::map<Stage, bool> enabled;
  size_t concurrency = 4;
  AnalysisOptions analysis;

  bool Enabled(Stage stage) const;
  // Checks bounds and that referenced input files exist. Throws ConfigError.
  void Validate() const;
};

// Relative paths are resolved against `base_dir`. Throws ConfigError.
PipelineConfig PipelineConfigFromJson(const json &doc,
                                      const std::filesystem::path &base_dir);
PipelineConfig LoadPipelineConfig(const std::filesystem::path &path);

// Settings and data-file contents that affect results. Paths, the
// concurrency bound, the cache location and the endpoint URL and credential
// are left out.
json SemanticConfig(const PipelineConfig &config);
std::string ConfigHash(const PipelineConfig &config);

struct RunOptions {
  // Restricts aggregate and report output to one region.
  std::optional<Region> region;
  // Replaces the primary input of the requested stage.
  std::optional<std::filesystem::path> stage_input;
  // Sends model requests here; no credential is required.
  std::optional<std::string> mock_endpoint;
};

struct StageOutcome {
  Stage stage = Stage::kIngest;
  bool skipped = false;
  std::string skip_reason;
  // Articles whose model call failed after the retry budget.
  size_t endpoint_failures = 0;
  std::map<std::string, size_t> counts;
};

// Runs `fn(i)` for i in [0, n) on up to `workers` threads. The first
// exception thrown by any call is rethrown after all threads finish.
void ParallelFor(size_t n, size_t workers,
                 const std::function<void(size_t)> &fn);

class Pipeline {
 public:
  Pipeline(PipelineConfig config, RunOptions options = {});

  StageOutcome Run(Stage stage);
  // Every enabled stage in order. Stops at the first exception.
  std::vector<StageOutcome> RunAll();

  const PipelineConfig &config() const { return config_; }
  const std::string &manifest_hash() const { return hash_; }
  std::filesystem::path ArtifactPath(const std::string &relative) const;

 private:
  StageOutcome Ingest();
  StageOutcome Filter();
  StageOutcome ClassifyGeneric();
  StageOutcome ExtractIndicators();
  StageOutcome TagFrames();
  StageOutcome Aggregate();
  StageOutcome Eval();
  StageOutcome Report();

  const Taxonomies &taxonomies();
  // Path of an upstream artifact; --stage-input replaces it when `primary`.
  // Throws UpstreamMissingError naming `producer` if the file is absent.
  std::filesystem::path Input(Stage stage, const std::string &relative,
                              Stage producer, bool primary) const;
  ChatClient &client();
  json Header(Stage stage) const;
  // Writers record artifact record counts for the manifest.
  void WriteJsonl(const std::string &relative, Stage stage,
                  const std::vector<json> &records);
  void WriteJson(const std::string &relative, Stage stage, json doc);
  void WriteText(const std::string &relative, const std::string &text);
  void WriteSvg(const std::string &relative, const std::string &svg);
  void RecordStage(const StageOutcome &outcome);

  PipelineConfig config_;
  RunOptions options_;
  std::string hash_;
  std::optional<Taxonomies> taxonomies_;
  std::unique_ptr<ChatClient> client_;
  std::map<std::string, size_t> artifacts_;
};

// Maps exceptions to CLI exit codes: ConfigError/TaxonomyError/
// invalid_argument -> 1, UpstreamMissingError -> 2, anything else -> 1.
int ExitCodeFor(const std::exception &error);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUpstreamMissing = 2;
inline constexpr int kExitEndpointFailure = 3;

}  // namespace framescope

#endif  // FRAMESCOPE_PIPELINE_H_
