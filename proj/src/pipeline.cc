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

#include "framescope/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <mutex>
#include <thread>

#include "framescope/charts.h"
#include "framescope/grounding.h"
#include "framescope/responses.h"
#include "framescope/text.h"

namespace framescope {

namespace fs = std::filesystem;

UpstreamMissingError::UpstreamMissingError(const std::string &stage,
                                           const std::string &needed,
                                           const fs::path &path)
    : std::runtime_error(stage + ": missing " + path.string() + "; run " +
                         needed + " first"),
      needed_(needed) {}

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kIngest:
      return "ingest";
    case Stage::kFilter:
      return "filter";
    case Stage::kClassifyGeneric:
      return "classify-generic";
    case Stage::kExtractIndicators:
      return "extract-indicators";
    case Stage::kTagFrames:
      return "tag-frames";
    case Stage::kAggregate:
      return "aggregate";
    case Stage::kEval:
      return "eval";
    case Stage::kReport:
      return "report";
  }
  return "?";
}

Stage ParseStage(std::string_view name) {
  for (Stage s : kAllStages) {
    if (StageName(s) == name) return s;
  }
  throw ConfigError("unknown stage \"" + std::string(name) + "\"");
}

namespace {

// Bumped whenever a stage's output format or logic changes.
const std::map<Stage, int> &StageVersions() {
  static const std::map<Stage, int> versions = {
      {Stage::kIngest, 1},           {Stage::kFilter, 1},
      {Stage::kClassifyGeneric, 1},  {Stage::kExtractIndicators, 1},
      {Stage::kTagFrames, 1},        {Stage::kAggregate, 1},
      {Stage::kEval, 1},             {Stage::kReport, 1}};
  return versions;
}

fs::path Resolve(const fs::path &base, const json &value) {
  if (value.is_null()) return {};
  fs::path p = value.get<std::string>();
  if (p.empty() || p.is_absolute()) return p;
  return (base / p).lexically_normal();
}

std::string FileDigest(const fs::path &path) {
  if (path.empty() || !fs::exists(path)) return "";
  return HexDigest(ReadTextFile(path));
}

json AnalysisToJson(const AnalysisOptions &a) {
  return json{{"cooccurrence_scope", CooccurrenceScopeName(a.cooccurrence_scope)},
              {"rate_variant", RateVariantName(a.rate_variant)},
              {"headline_scope", a.headline_scope},
              {"occurrence_source", SourceName(a.occurrence_source)},
              {"eval_include_none", a.eval_include_none},
              {"top_k", a.top_k},
              {"max_clusters", a.max_clusters},
              {"time_bin", TimeBinName(a.time_bin)},
              {"target_kinds", a.target_kinds},
              {"elite_kinds", a.elite_kinds},
              {"people_kinds", a.people_kinds}};
}

std::string UtcNow() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<Article> ReadArticles(const fs::path &path) {
  std::vector<Article> out;
  ReadJsonl(
      path, [&](const json &r, size_t) { out.push_back(ArticleFromJson(r)); },
      [&](size_t line, const std::string &why) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                                 ": " + why);
      });
  return out;
}

std::vector<json> ReadRecords(const fs::path &path) {
  std::vector<json> out;
  ReadJsonl(
      path, [&](const json &r, size_t) { out.push_back(r); },
      [&](size_t line, const std::string &why) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                                 ": " + why);
      });
  return out;
}

json ReadJsonFile(const fs::path &path) {
  json doc = json::parse(ReadTextFile(path), nullptr, false);
  if (doc.is_discarded()) {
    throw std::runtime_error(path.string() + ": not valid JSON");
  }
  return doc;
}

void SortById(std::vector<Article> *articles) {
  std::sort(articles->begin(), articles->end(),
            [](const Article &a, const Article &b) { return a.id < b.id; });
}

template <typename T>
std::vector<T> Select(const std::vector<T> &items,
                      const std::set<std::string> &ids) {
  std::vector<T> out;
  for (const auto &item : items) {
    if (ids.count(item.article_id)) out.push_back(item);
  }
  return out;
}

std::vector<IndicatorInstance> OfKinds(
    const std::vector<IndicatorInstance> &instances,
    const std::vector<std::string> &kinds) {
  const std::set<std::string> wanted(kinds.begin(), kinds.end());
  std::vector<IndicatorInstance> out;
  for (const auto &i : instances) {
    if (i.grounded && wanted.count(i.kind_path)) out.push_back(i);
  }
  return out;
}

std::string CsvLine(const std::vector<std::string> &fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += CsvEscape(fields[i]);
  }
  return out + "\n";
}

}  // namespace

bool PipelineConfig::Enabled(Stage stage) const {
  auto it = enabled.find(stage);
  return it == enabled.end() ? true : it->second;
}

void PipelineConfig::Validate() const {
  auto require = [](const fs::path &p, const char *what) {
    if (p.empty()) throw ConfigError(std::string("paths.") + what + " is not set");
    if (!fs::exists(p)) {
      throw ConfigError(std::string("paths.") + what + ": " + p.string() +
                        " does not exist");
    }
  };
  require(paths.corpus, "corpus");
  require(paths.taxonomy_dir, "taxonomy_dir");
  if (paths.output_dir.empty()) throw ConfigError("paths.output_dir is not set");
  if (Enabled(Stage::kTagFrames)) {
    if (analysis.occurrence_source == OccurrenceSource::kLexicon) {
      require(paths.lexicon, "lexicon");
    }
    if (!paths.abbreviations.empty()) require(paths.abbreviations, "abbreviations");
  }
  if (!paths.gazetteer.empty()) require(paths.gazetteer, "gazetteer");
  if (!paths.stopwords.empty()) require(paths.stopwords, "stopwords");
  if (!paths.gold.empty() && Enabled(Stage::kEval)) require(paths.gold, "gold");
  if (concurrency < 1) throw ConfigError("concurrency must be at least 1");
  if (analysis.top_k < 1) throw ConfigError("analysis.top_k must be at least 1");
  try {
    filter.Validate();
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("filter: ") + e.what());
  }
}

PipelineConfig PipelineConfigFromJson(const json &doc, const fs::path &base) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> kTopKeys = {
      "paths", "filter", "endpoint", "prompt", "stages", "concurrency",
      "analysis"};
  for (const auto &[key, v] : doc.items()) {
    if (!kTopKeys.count(key)) {
      throw ConfigError("config: unknown key \"" + key + "\"");
    }
  }
  PipelineConfig c;
  try {
    const json paths = doc.value("paths", json::object());
    c.paths.corpus = Resolve(base, paths.value("corpus", json()));
    c.paths.corpus_format =
        ParseCorpusFormat(paths.value("corpus_format", "jsonl"));
    c.paths.taxonomy_dir = Resolve(base, paths.value("taxonomy_dir", json()));
    c.paths.lexicon = Resolve(base, paths.value("lexicon", json()));
    c.paths.gazetteer = Resolve(base, paths.value("gazetteer", json()));
    c.paths.stopwords = Resolve(base, paths.value("stopwords", json()));
    c.paths.abbreviations = Resolve(base, paths.value("abbreviations", json()));
    c.paths.cache_dir = Resolve(base, paths.value("cache_dir", json()));
    c.paths.output_dir = Resolve(base, paths.value("output_dir", json()));
    c.paths.gold = Resolve(base, paths.value("gold", json()));
    c.paths.gold_format = ParseGoldFormat(paths.value("gold_format", "labels"));
    c.paths.external_occurrences =
        Resolve(base, paths.value("external_occurrences", json()));

    if (doc.contains("filter")) c.filter = FilterConfigFromJson(doc.at("filter"));
    c.endpoint = EndpointConfigFromJson(doc.value("endpoint", json::object()));

    const json prompt = doc.value("prompt", json::object());
    c.prompt.temperature = prompt.value("temperature", 0.0);
    c.prompt.max_output_tokens = prompt.value("max_output_tokens", 1024);
    c.prompt.max_input_tokens = prompt.value("max_input_tokens", size_t{3000});

    for (const auto &[name, on] : doc.value("stages", json::object()).items()) {
      c.enabled[ParseStage(name)] = on.get<bool>();
    }
    c.concurrency = doc.value("concurrency", size_t{4});

    const json a = doc.value("analysis", json::object());
    AnalysisOptions &o = c.analysis;
    o.cooccurrence_scope =
        ParseCooccurrenceScope(a.value("cooccurrence_scope", "article"));
    o.rate_variant = ParseRateVariant(a.value("rate_variant", "mean"));
    o.headline_scope = a.value("text_scope", "body") == std::string("headline");
    const std::string source = a.value("occurrence_source", "lexicon");
    if (source == "lexicon") {
      o.occurrence_source = OccurrenceSource::kLexicon;
    } else if (source == "external") {
      o.occurrence_source = OccurrenceSource::kExternal;
    } else {
      throw ConfigError("analysis.occurrence_source must be lexicon or external");
    }
    o.eval_include_none = a.value("eval_include_none", false);
    o.top_k = a.value("top_k", o.top_k);
    o.max_clusters = a.value("max_clusters", o.max_clusters);
    o.time_bin = ParseTimeBin(a.value("time_bin", "week"));
    o.target_kinds = a.value("target_kinds", o.target_kinds);
    o.elite_kinds = a.value("elite_kinds", o.elite_kinds);
    o.people_kinds = a.value("people_kinds", o.people_kinds);
  } catch (const ConfigError &) {
    throw;
  } catch (const std::exception &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.prompt.model = c.endpoint.model;
  c.endpoint.cache_dir = c.paths.cache_dir;
  c.endpoint.max_in_flight = c.concurrency;
  return c;
}

PipelineConfig LoadPipelineConfig(const fs::path &path) {
  std::string text;
  try {
    text = ReadTextFile(path);
  } catch (const std::exception &e) {
    throw ConfigError(e.what());
  }
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ConfigError(path.string() + ": not valid JSON");
  }
  return PipelineConfigFromJson(doc, fs::absolute(path).parent_path());
}

json SemanticConfig(const PipelineConfig &c) {
  json data = json::object();
  for (const char *name :
       {"generic_frames.json", "indicators.json", "frames_of_interest.json"}) {
    data[name] = FileDigest(c.paths.taxonomy_dir / name);
  }
  data["lexicon"] = FileDigest(c.paths.lexicon);
  data["gazetteer"] = FileDigest(c.paths.gazetteer);
  data["stopwords"] = FileDigest(c.paths.stopwords);
  data["abbreviations"] = FileDigest(c.paths.abbreviations);
  data["gold"] = FileDigest(c.paths.gold);
  return json{{"filter", FilterConfigToJson(c.filter)},
              {"model", c.endpoint.model},
              {"prompt",
               {{"temperature", c.prompt.temperature},
                {"max_output_tokens", c.prompt.max_output_tokens},
                {"max_input_tokens", c.prompt.max_input_tokens}}},
              {"corpus_format",
               c.paths.corpus_format == CorpusFormat::kJsonl ? "jsonl" : "csv"},
              {"gold_format",
               c.paths.gold_format == GoldFormat::kLabels ? "labels" : "mfc"},
              {"analysis", AnalysisToJson(c.analysis)},
              {"stage_versions",
               [] {
                 json v = json::object();
                 for (const auto &[s, n] : StageVersions()) {
                   v[std::string(StageName(s))] = n;
                 }
                 return v;
               }()},
              {"data_files", data}};
}

std::string ConfigHash(const PipelineConfig &config) {
  return HexDigest(DumpCanonical(SemanticConfig(config)));
}

void ParallelFor(size_t n, size_t workers,
                 const std::function<void(size_t)> &fn) {
  workers = std::max<size_t>(1, std::min(workers, n));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto work = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto &t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

Pipeline::Pipeline(PipelineConfig config, RunOptions options)
    : config_(std::move(config)), options_(std::move(options)) {
  if (options_.mock_endpoint) {
    config_.endpoint.base_url = *options_.mock_endpoint;
    if (config_.endpoint.model.empty()) config_.endpoint.model = "mock";
    config_.prompt.model = config_.endpoint.model;
  }
  config_.Validate();
  hash_ = ConfigHash(config_);
}

fs::path Pipeline::ArtifactPath(const std::string &relative) const {
  return config_.paths.output_dir / relative;
}

const Taxonomies &Pipeline::taxonomies() {
  if (!taxonomies_) taxonomies_ = LoadTaxonomies(config_.paths.taxonomy_dir);
  return *taxonomies_;
}

ChatClient &Pipeline::client() {
  if (!client_) {
    try {
      config_.endpoint.Validate(!options_.mock_endpoint.has_value());
    } catch (const std::invalid_argument &e) {
      throw ConfigError(std::string("endpoint: ") + e.what());
    }
    client_ = std::make_unique<ChatClient>(config_.endpoint);
  }
  return *client_;
}

fs::path Pipeline::Input(Stage stage, const std::string &relative,
                         Stage producer, bool primary) const {
  fs::path path = ArtifactPath(relative);
  if (primary && options_.stage_input) path = *options_.stage_input;
  if (!fs::exists(path)) {
    throw UpstreamMissingError(std::string(StageName(stage)),
                               std::string(StageName(producer)), path);
  }
  return path;
}

json Pipeline::Header(Stage stage) const {
  json h = {{"manifest_hash", hash_},
            {"stage", StageName(stage)},
            {"stage_version", StageVersions().at(stage)}};
  if (stage == Stage::kClassifyGeneric || stage == Stage::kExtractIndicators) {
    h["model"] = config_.endpoint.model;
  }
  if (stage == Stage::kTagFrames || stage == Stage::kAggregate ||
      stage == Stage::kReport) {
    h["occurrence_source"] = SourceName(config_.analysis.occurrence_source);
  }
  return h;
}

void Pipeline::WriteJsonl(const std::string &relative, Stage stage,
                          const std::vector<json> &records) {
  WriteTextFile(ArtifactPath(relative), FormatJsonl(Header(stage), records));
  artifacts_[relative] = records.size();
}

void Pipeline::WriteJson(const std::string &relative, Stage stage, json doc) {
  doc[std::string(kHeaderKey)] = Header(stage);
  WriteTextFile(ArtifactPath(relative), DumpCanonical(doc, 2) + "\n");
  artifacts_[relative] = 1;
}

void Pipeline::WriteText(const std::string &relative,
                         const std::string &text) {
  WriteTextFile(ArtifactPath(relative),
                "# manifest_hash=" + hash_ + "\n" + text);
  artifacts_[relative] = 1;
}

void Pipeline::WriteSvg(const std::string &relative, const std::string &svg) {
  WriteTextFile(ArtifactPath(relative), svg);
  artifacts_[relative] = 1;
}

void Pipeline::RecordStage(const StageOutcome &outcome) {
  const fs::path path = ArtifactPath("manifest.json");
  json manifest = json::object();
  if (fs::exists(path)) {
    manifest = json::parse(ReadTextFile(path), nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object() ||
        manifest.value("config_hash", "") != hash_) {
      manifest = json::object();
    }
  }
  manifest["config_hash"] = hash_;
  manifest["semantic_config"] = SemanticConfig(config_);
  manifest["backends"] = {
      {"model", config_.endpoint.model},
      {"endpoint", options_.mock_endpoint ? "mock" : "http"},
      {"occurrence_source", SourceName(config_.analysis.occurrence_source)}};
  manifest["deviation_notes"] = json::array(
      {"topic filter: configurable keyword-exclusion sets over titles stand "
       "in for neural topic modeling",
       std::string("semantic frames: ") +
           (config_.analysis.occurrence_source == OccurrenceSource::kLexicon
                ? "lexical-unit tagger with heuristic Assailant/Victim roles"
                : "occurrences imported from an external frame parser"),
       "target clustering: normalized token-set Jaccard merging (threshold "
       "0.5) instead of embedding-based topic clustering"});
  json entry = {{"completed_at", UtcNow()},
                {"stage_version", StageVersions().at(outcome.stage)},
                {"skipped", outcome.skipped},
                {"counts", outcome.counts},
                {"artifacts", artifacts_},
                {"endpoint_failures", outcome.endpoint_failures}};
  if (outcome.skipped) entry["skip_reason"] = outcome.skip_reason;
  manifest["stages"][std::string(StageName(outcome.stage))] = entry;
  WriteTextFile(path, DumpCanonical(manifest, 2) + "\n");
}

StageOutcome Pipeline::Run(Stage stage) {
  artifacts_.clear();
  StageOutcome outcome;
  switch (stage) {
    case Stage::kIngest:
      outcome = Ingest();
      break;
    case Stage::kFilter:
      outcome = Filter();
      break;
    case Stage::kClassifyGeneric:
      outcome = ClassifyGeneric();
      break;
    case Stage::kExtractIndicators:
      outcome = ExtractIndicators();
      break;
    case Stage::kTagFrames:
      outcome = TagFrames();
      break;
    case Stage::kAggregate:
      outcome = Aggregate();
      break;
    case Stage::kEval:
      outcome = Eval();
      break;
    case Stage::kReport:
      outcome = Report();
      break;
  }
  outcome.stage = stage;
  RecordStage(outcome);
  return outcome;
}

std::vector<StageOutcome> Pipeline::RunAll() {
  std::vector<StageOutcome> out;
  for (Stage s : kAllStages) {
    const bool always = s == Stage::kIngest || s == Stage::kFilter ||
                        s == Stage::kAggregate;
    if (!always && !config_.Enabled(s)) continue;
    out.push_back(Run(s));
  }
  return out;
}

StageOutcome Pipeline::Ingest() {
  const fs::path corpus =
      options_.stage_input ? *options_.stage_input : config_.paths.corpus;
  IngestResult result = framescope::Ingest(corpus, config_.paths.corpus_format);
  SortById(&result.articles);
  std::vector<json> records;
  for (const auto &a : result.articles) records.push_back(ArticleToJson(a));
  WriteJsonl("ingest/articles.jsonl", Stage::kIngest, records);
  WriteJson("ingest/audit.json", Stage::kIngest,
            {{"articles", result.articles.size()},
             {"skipped", result.skipped},
             {"skip_reasons", result.skip_reasons}});
  StageOutcome o;
  o.counts = {{"articles", result.articles.size()},
              {"skipped", result.skipped}};
  return o;
}

StageOutcome Pipeline::Filter() {
  std::vector<Article> articles = ReadArticles(
      Input(Stage::kFilter, "ingest/articles.jsonl", Stage::kIngest, true));
  FilterReport report;
  FilterResult result = RunFilters(articles, config_.filter, &report);
  SortById(&result.retained);
  std::vector<json> records;
  for (const auto &a : result.retained) records.push_back(ArticleToJson(a));
  WriteJsonl("filter/filtered.jsonl", Stage::kFilter, records);
  WriteJson("filter/filter_report.json", Stage::kFilter, report.ToJson());
  StageOutcome o;
  o.counts = {{"input", report.input_count},
              {"retained", report.retained_count}};
  for (const auto &[stage, n] : report.dropped_by_stage) {
    o.counts["dropped_" + stage] = n;
  }
  return o;
}

StageOutcome Pipeline::ClassifyGeneric() {
  const std::vector<Article> articles = ReadArticles(Input(
      Stage::kClassifyGeneric, "filter/filtered.jsonl", Stage::kFilter, true));
  const GenericInventory &inventory = taxonomies().generic;
  ChatClient &chat = client();

  struct Slot {
    GenericFrameAssignment assignment;
    std::string status;
    std::string error;
    bool truncated = false;
  };
  std::vector<Slot> slots(articles.size());
  ParallelFor(articles.size(), config_.concurrency, [&](size_t i) {
    const Article &a = articles[i];
    Slot &slot = slots[i];
    ChatRequest request;
    try {
      request = RenderGenericPrompt(a, inventory, config_.prompt);
    } catch (const std::invalid_argument &e) {
      slot.assignment.article_id = a.id;
      slot.assignment.frames = {std::string(kNoneLabel)};
      slot.status = "prompt_error";
      slot.error = e.what();
      return;
    }
    slot.truncated = request.truncated;
    const CompletionResult result = chat.Complete(request);
    if (!result.ok) {
      slot.assignment.article_id = a.id;
      slot.assignment.frames = {std::string(kNoneLabel)};
      slot.status = "endpoint_error";
      slot.error = result.error;
      return;
    }
    slot.assignment = ParseGenericResponse(result.content, a.id, inventory);
    if (!RecoverJsonObject(result.content)) {
      slot.status = "malformed";
    } else {
      slot.status = slot.assignment.valid ? "ok" : "invalid";
    }
  });

  std::vector<json> records, status;
  std::map<std::string, size_t> by_status;
  size_t unknown = 0, truncated = 0, failures = 0;
  for (const auto &slot : slots) {
    records.push_back(AssignmentToJson(slot.assignment));
    json s = {{"article_id", slot.assignment.article_id},
              {"status", slot.status},
              {"unknown_labels", slot.assignment.unknown_labels},
              {"truncated", slot.truncated}};
    if (!slot.error.empty()) s["error"] = slot.error;
    status.push_back(s);
    ++by_status[slot.status];
    unknown += slot.assignment.unknown_labels;
    truncated += slot.truncated;
    failures += slot.status == "endpoint_error";
  }
  WriteJsonl("classify/assignments.jsonl", Stage::kClassifyGeneric, records);
  WriteJsonl("classify/status.jsonl", Stage::kClassifyGeneric, status);
  json audit = {{"articles", articles.size()},
                {"by_status", by_status},
                {"malformed", by_status["malformed"]},
                {"unknown_labels", unknown},
                {"truncated_prompts", truncated}};
  WriteJson("classify/audit.json", Stage::kClassifyGeneric, audit);
  StageOutcome o;
  o.endpoint_failures = failures;
  o.counts = {{"articles", articles.size()}, {"unknown_labels", unknown}};
  for (const auto &[k, n] : by_status) o.counts[k] = n;
  return o;
}

StageOutcome Pipeline::ExtractIndicators() {
  const std::vector<Article> articles =
      ReadArticles(Input(Stage::kExtractIndicators, "filter/filtered.jsonl",
                         Stage::kFilter, true));
  const IndicatorInventory &inventory = taxonomies().indicators;
  ChatClient &chat = client();

  struct Slot {
    IndicatorParse parse;
    std::string status;
    std::string error;
    bool truncated = false;
  };
  std::vector<Slot> slots(articles.size());
  ParallelFor(articles.size(), config_.concurrency, [&](size_t i) {
    const Article &a = articles[i];
    Slot &slot = slots[i];
    ChatRequest request;
    try {
      request = RenderIndicatorPrompt(a, inventory, config_.prompt);
    } catch (const std::invalid_argument &e) {
      slot.status = "prompt_error";
      slot.error = e.what();
      return;
    }
    slot.truncated = request.truncated;
    const CompletionResult result = chat.Complete(request);
    if (!result.ok) {
      slot.status = "endpoint_error";
      slot.error = result.error;
      return;
    }
    slot.parse = ParseIndicatorResponse(result.content, a, inventory);
    slot.status = slot.parse.failed ? "malformed" : "ok";
    slot.error = slot.parse.failure;
  });

  std::vector<json> instances, status, ungrounded;
  std::map<std::string, size_t> by_status, malformed_by_kind, grounded_by_kind;
  std::map<std::string, size_t> unknown_kinds;
  size_t grounded = 0, total = 0, failures = 0, truncated = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    const Slot &slot = slots[i];
    size_t article_grounded = 0;
    for (const auto &inst : slot.parse.instances) {
      instances.push_back(InstanceToJson(inst));
      ++total;
      if (inst.grounded) {
        ++grounded;
        ++article_grounded;
        ++grounded_by_kind[inst.kind_path];
      } else {
        ungrounded.push_back({{"article_id", inst.article_id},
                              {"kind_path", inst.kind_path},
                              {"excerpt", inst.excerpt}});
      }
    }
    size_t malformed_entries = 0;
    for (const auto &[k, n] : slot.parse.malformed_by_kind) {
      malformed_by_kind[k] += n;
      malformed_entries += n;
    }
    for (const auto &k : slot.parse.unknown_kinds) ++unknown_kinds[k];
    json s = {{"article_id", articles[i].id},
              {"status", slot.status},
              {"instances", slot.parse.instances.size()},
              {"grounded", article_grounded},
              {"malformed_entries", malformed_entries},
              {"truncated", slot.truncated}};
    if (!slot.error.empty()) s["error"] = slot.error;
    status.push_back(s);
    ++by_status[slot.status];
    failures += slot.status == "endpoint_error";
    truncated += slot.truncated;
  }
  WriteJsonl("extract/instances.jsonl", Stage::kExtractIndicators, instances);
  WriteJsonl("extract/status.jsonl", Stage::kExtractIndicators, status);
  json audit = {{"articles", articles.size()},
                {"by_status", by_status},
                {"malformed", by_status["malformed"]},
                {"instances", total},
                {"grounded", grounded},
                {"ungrounded", total - grounded},
                {"grounded_by_kind", grounded_by_kind},
                {"malformed_entries_by_kind", malformed_by_kind},
                {"unknown_kinds", unknown_kinds},
                {"truncated_prompts", truncated},
                {"ungrounded_instances", ungrounded}};
  WriteJson("extract/audit.json", Stage::kExtractIndicators, audit);
  StageOutcome o;
  o.endpoint_failures = failures;
  o.counts = {{"articles", articles.size()},
              {"instances", total},
              {"grounded", grounded}};
  for (const auto &[k, n] : by_status) o.counts[k] = n;
  return o;
}

namespace {

bool OccurrenceLess(const SemanticFrameOccurrence &a,
                    const SemanticFrameOccurrence &b) {
  if (a.article_id != b.article_id) return a.article_id < b.article_id;
  if (a.sentence_index != b.sentence_index) {
    return a.sentence_index < b.sentence_index;
  }
  if (a.trigger.start != b.trigger.start) {
    return a.trigger.start < b.trigger.start;
  }
  return a.frame_name < b.frame_name;
}

SemanticFrameOccurrence OccurrenceFromJson(const json &r,
                                           const FrameInventory &inventory,
                                           const fs::path &path) {
  // The external reader only accepts its own source tag.
  json record = r;
  record.erase("source");
  ExternalIngest one = IngestExternalRecords({record}, inventory);
  if (one.occurrences.size() != 1) {
    throw std::runtime_error(path.string() + ": unreadable occurrence record");
  }
  SemanticFrameOccurrence o = one.occurrences.front();
  if (r.value("source", "external") == "lexicon") {
    o.source = OccurrenceSource::kLexicon;
  }
  return o;
}

}  // namespace

StageOutcome Pipeline::TagFrames() {
  const bool external =
      config_.analysis.occurrence_source == OccurrenceSource::kExternal;
  const std::vector<Article> articles = ReadArticles(Input(
      Stage::kTagFrames, "filter/filtered.jsonl", Stage::kFilter, !external));
  const FrameInventory &inventory = taxonomies().frames;
  std::vector<SemanticFrameOccurrence> occurrences;
  json audit = {{"articles", articles.size()},
                {"source", SourceName(config_.analysis.occurrence_source)},
                {"text_scope",
                 config_.analysis.headline_scope ? "headline" : "body"}};

  if (external) {
    fs::path path = options_.stage_input ? *options_.stage_input
                                         : config_.paths.external_occurrences;
    if (path.empty() || !fs::exists(path)) {
      throw ConfigError(
          "tag-frames: external occurrence file not found (set "
          "paths.external_occurrences or pass --stage-input)");
    }
    ExternalIngest ingest = IngestExternal(path, inventory);
    std::set<std::string> ids;
    for (const auto &a : articles) ids.insert(a.id);
    size_t unknown_article = 0;
    for (auto &o : ingest.occurrences) {
      if (ids.count(o.article_id)) {
        occurrences.push_back(std::move(o));
      } else {
        ++unknown_article;
      }
    }
    audit["skipped"] = ingest.skipped;
    audit["out_of_inventory"] = ingest.out_of_inventory;
    audit["dropped_roles"] = ingest.dropped_roles;
    audit["unknown_article"] = unknown_article;
    audit["problems"] = ingest.problems;
  } else {
    const Lexicon lexicon = LoadLexicon(config_.paths.lexicon, inventory);
    const Gazetteer gazetteer = config_.paths.gazetteer.empty()
                                    ? Gazetteer()
                                    : LoadGazetteer(config_.paths.gazetteer);
    const std::set<std::string> abbreviations =
        config_.paths.abbreviations.empty()
            ? std::set<std::string>()
            : LoadWordList(config_.paths.abbreviations);
    std::vector<std::vector<SemanticFrameOccurrence>> per_article(
        articles.size());
    ParallelFor(articles.size(), config_.concurrency, [&](size_t i) {
      const Article &a = articles[i];
      const std::string &text =
          config_.analysis.headline_scope ? a.title : a.body;
      const auto sentences = SplitSentences(text, abbreviations);
      for (size_t s = 0; s < sentences.size(); ++s) {
        for (auto &o : TagSentence(sentences[s], lexicon, a.id, s)) {
          per_article[i].push_back(
              ExtractRoles(o, sentences[s], gazetteer, inventory));
        }
      }
    });
    for (auto &list : per_article) {
      for (auto &o : list) occurrences.push_back(std::move(o));
    }
    audit["lexical_units"] = lexicon.unit_count();
  }
  std::sort(occurrences.begin(), occurrences.end(), OccurrenceLess);

  std::vector<json> records;
  std::map<std::string, size_t> by_frame, roles_filled;
  for (const auto &o : occurrences) {
    records.push_back(OccurrenceToJson(o));
    ++by_frame[o.frame_name];
    for (const auto &[role, f] : o.roles) ++roles_filled[role];
  }
  WriteJsonl("tag/occurrences.jsonl", Stage::kTagFrames, records);
  audit["occurrences"] = occurrences.size();
  audit["by_frame"] = by_frame;
  audit["roles_filled"] = roles_filled;
  WriteJson("tag/audit.json", Stage::kTagFrames, audit);
  StageOutcome o;
  o.counts = {{"articles", articles.size()},
              {"occurrences", occurrences.size()}};
  return o;
}

StageOutcome Pipeline::Aggregate() {
  const Taxonomies &tax = taxonomies();
  std::vector<Article> articles = ReadArticles(
      Input(Stage::kAggregate, "filter/filtered.jsonl", Stage::kFilter, false));
  SortById(&articles);

  std::vector<GenericFrameAssignment> assignments;
  if (config_.Enabled(Stage::kClassifyGeneric)) {
    for (const auto &r :
         ReadRecords(Input(Stage::kAggregate, "classify/assignments.jsonl",
                           Stage::kClassifyGeneric, false))) {
      GenericFrameAssignment a = AssignmentFromJson(r);
      if (a.valid) assignments.push_back(std::move(a));
    }
  }
  std::vector<IndicatorInstance> instances;
  std::set<std::string> extracted;
  if (config_.Enabled(Stage::kExtractIndicators)) {
    for (const auto &r :
         ReadRecords(Input(Stage::kAggregate, "extract/instances.jsonl",
                           Stage::kExtractIndicators, false))) {
      instances.push_back(InstanceFromJson(r));
    }
    for (const auto &r :
         ReadRecords(Input(Stage::kAggregate, "extract/status.jsonl",
                           Stage::kExtractIndicators, false))) {
      if (r.value("status", "") == "ok") {
        extracted.insert(r.at("article_id").get<std::string>());
      }
    }
  }
  std::vector<SemanticFrameOccurrence> occurrences;
  if (config_.Enabled(Stage::kTagFrames)) {
    const fs::path path = Input(Stage::kAggregate, "tag/occurrences.jsonl",
                                Stage::kTagFrames, false);
    for (const auto &r : ReadRecords(path)) {
      occurrences.push_back(OccurrenceFromJson(r, tax.frames, path));
    }
  }
  std::sort(occurrences.begin(), occurrences.end(), OccurrenceLess);
  const Gazetteer gazetteer = config_.paths.gazetteer.empty()
                                  ? Gazetteer()
                                  : LoadGazetteer(config_.paths.gazetteer);
  const std::set<std::string> stopwords =
      config_.paths.stopwords.empty() ? std::set<std::string>()
                                      : LoadWordList(config_.paths.stopwords);
  const AnalysisOptions &opt = config_.analysis;

  std::vector<Region> regions;
  if (options_.region) {
    regions.push_back(*options_.region);
  } else {
    regions.assign(kAllRegions.begin(), kAllRegions.end());
  }
  std::map<std::string, Date> published;
  for (const auto &a : articles) published[a.id] = a.published_at;

  const std::vector<std::pair<std::string, std::string>> role_keys = {
      {"Attack", std::string(kAssailantRole)},
      {"Attack", std::string(kVictimRole)},
      {"Killing", std::string(kAssailantRole)},
      {"Killing", std::string(kVictimRole)},
      {"*", std::string(kAssailantRole)},
      {"*", std::string(kVictimRole)}};

  json region_docs = json::array();
  json rate_doc = json::object(), polarity_doc = json::object();
  json rate_audit = json::object();
  json clusters_doc = json::object(), words_doc = json::object();
  json frame_share_doc = json::object(), roles_doc = json::object();
  json temporal_doc = json::object();
  std::string generic_csv = CsvLine({"region", "label", "share"});
  std::string rate_csv = CsvLine({"region", "kind_path", "polarity", "rate"});
  std::string clusters_csv =
      CsvLine({"region", "canonical_label", "count", "members"});
  std::string words_csv = CsvLine({"region", "group", "rank", "word", "count"});
  std::string frame_csv = CsvLine({"region", "scope", "frame", "share"});
  std::string roles_csv =
      CsvLine({"region", "frame", "role", "group", "share"});
  std::string temporal_csv =
      CsvLine({"region", "series", "bin_start", "key", "count"});
  std::vector<std::pair<std::string, WordCounts>> people_cols, elite_cols;
  size_t total_instances_used = 0;

  auto add_scoped_shares = [&](const std::string &region_name,
                               const std::vector<SemanticFrameOccurrence> &occ) {
    json by_scope = json::object();
    for (EffectScope scope :
         {EffectScope::kAll, EffectScope::kVisible, EffectScope::kInvisible}) {
      const Shares shares = FrameShare(occ, tax.frames, scope);
      by_scope[std::string(EffectScopeName(scope))] = SharesToJson(shares);
      for (const auto &[frame, v] : shares) {
        frame_csv += CsvLine({region_name, std::string(EffectScopeName(scope)),
                              frame, FormatDouble(v)});
      }
    }
    frame_share_doc[region_name] = by_scope;
  };

  for (Region region : regions) {
    const std::string name(RegionName(region));
    std::vector<Article> region_articles;
    std::set<std::string> ids, extracted_ids;
    for (const auto &a : articles) {
      if (a.region != region) continue;
      region_articles.push_back(a);
      ids.insert(a.id);
    }
    std::vector<Article> rate_articles;
    for (const auto &a : region_articles) {
      if (extracted.count(a.id)) rate_articles.push_back(a);
    }
    const auto region_assignments = Select(assignments, ids);
    const auto region_instances = Select(instances, ids);
    const auto region_occurrences = Select(occurrences, ids);

    RegionAggregate agg;
    agg.region = region;
    agg.article_count = region_articles.size();
    for (const auto &a : region_articles) agg.token_total += a.token_count;
    agg.generic_frame_share = GenericFrameShare(region_assignments);
    for (const auto &[label, v] : agg.generic_frame_share) {
      generic_csv += CsvLine({name, label, FormatDouble(v)});
    }

    const IndicatorRates rates = IndicatorRate(
        region_instances, rate_articles, tax.indicators, opt.rate_variant);
    agg.indicator_rate = rates.rate;
    json polarity = json::object();
    for (Polarity p : {Polarity::kWar, Polarity::kPeace}) {
      long double sum = 0.0L;
      size_t kinds = 0;
      for (const auto &kind : tax.indicators.kinds()) {
        if (kind.polarity != p) continue;
        sum += rates.rate.at(kind.path);
        ++kinds;
      }
      polarity[std::string(PolarityName(p))] = {
          {"sum_of_kind_rates", static_cast<double>(sum)},
          {"mean_kind_rate",
           kinds ? static_cast<double>(sum / kinds) : 0.0}};
    }
    for (const auto &kind : tax.indicators.kinds()) {
      rate_csv += CsvLine({name, kind.path,
                           std::string(PolarityName(kind.polarity)),
                           FormatDouble(rates.rate.at(kind.path))});
    }
    rate_doc[name] = SharesToJson(rates.rate);
    polarity_doc[name] = polarity;
    rate_audit[name] = {{"articles_used", rates.articles_used},
                        {"zero_token_articles", rates.zero_token_articles},
                        {"ungrounded_instances", rates.ungrounded_instances},
                        {"unmatched_instances", rates.unmatched_instances},
                        {"excluded_failed_extraction",
                         region_articles.size() - rate_articles.size()}};
    total_instances_used += region_instances.size();

    std::vector<IndicatorInstance> target_instances =
        OfKinds(region_instances, opt.target_kinds);
    std::vector<TargetCluster> clusters = ClusterTargets(target_instances, name);
    if (clusters.size() > opt.max_clusters) clusters.resize(opt.max_clusters);
    clusters_doc[name] = ClustersToJson(clusters);
    for (const auto &c : clusters) {
      std::string members;
      for (const auto &m : c.members) members += (members.empty() ? "" : "|") + m;
      clusters_csv += CsvLine({name, c.canonical_label,
                               std::to_string(c.count), members});
    }

    const WordCounts people =
        TopWords(OfKinds(region_instances, opt.people_kinds), opt.top_k,
                 stopwords);
    const WordCounts elite = TopWords(OfKinds(region_instances, opt.elite_kinds),
                                      opt.top_k, stopwords);
    words_doc[name] = {{"people", WordCountsToJson(people)},
                       {"elite", WordCountsToJson(elite)}};
    for (const auto &[group, counts] :
         {std::pair<std::string, const WordCounts *>{"people", &people},
          {"elite", &elite}}) {
      for (size_t r = 0; r < counts->size(); ++r) {
        words_csv += CsvLine({name, group, std::to_string(r + 1),
                              (*counts)[r].first,
                              std::to_string((*counts)[r].second)});
      }
    }
    people_cols.emplace_back(name, people);
    elite_cols.emplace_back(name, elite);

    agg.frame_share = FrameShare(region_occurrences, tax.frames);
    add_scoped_shares(name, region_occurrences);
    json roles = json::array();
    for (const auto &[frame, role] : role_keys) {
      const Shares shares = RoleDistribution(
          region_occurrences, gazetteer, frame == "*" ? "" : frame, role);
      agg.role_distribution[{frame, role}] = shares;
      roles.push_back(
          {{"frame", frame}, {"role", role}, {"groups", SharesToJson(shares)}});
      for (const auto &[group, v] : shares) {
        roles_csv += CsvLine({name, frame, role, group, FormatDouble(v)});
      }
    }
    roles_doc[name] = roles;

    std::vector<DatedKey> polarity_events, frame_events;
    for (const auto &inst : region_instances) {
      if (!inst.grounded || !tax.indicators.Find(inst.kind_path)) continue;
      polarity_events.push_back(
          {published.at(inst.article_id),
           std::string(PolarityName(tax.indicators.PolarityOf(inst.kind_path)))});
    }
    for (const auto &o : region_occurrences) {
      const FrameOfInterest *f = tax.frames.Find(o.frame_name);
      if (!f) continue;
      frame_events.push_back({published.at(o.article_id),
                              std::string(EffectClassName(f->effect_class))});
    }
    const auto indicator_series = TemporalSeries(polarity_events, opt.time_bin);
    const auto frame_series = TemporalSeries(frame_events, opt.time_bin);
    temporal_doc[name] = {
        {"indicator_polarity", TemporalSeriesToJson(indicator_series)},
        {"frame_effect_class", TemporalSeriesToJson(frame_series)}};
    for (const auto &[series, buckets] :
         {std::pair<std::string, const std::vector<TimeBucket> *>{
              "indicator_polarity", &indicator_series},
          {"frame_effect_class", &frame_series}}) {
      for (const auto &b : *buckets) {
        for (const auto &[k, n] : b.counts) {
          temporal_csv += CsvLine(
              {name, series, FormatIsoDate(b.start), k, std::to_string(n)});
        }
      }
    }
    region_docs.push_back(RegionAggregateToJson(agg));
  }

  // Corpus-wide frame shares and co-occurrence.
  std::set<std::string> region_ids;
  for (const auto &a : articles) {
    if (std::find(regions.begin(), regions.end(), a.region) != regions.end()) {
      region_ids.insert(a.id);
    }
  }
  const auto scoped_occurrences = Select(occurrences, region_ids);
  add_scoped_shares("ALL", scoped_occurrences);
  json cooc_doc = {
      {"scope", CooccurrenceScopeName(opt.cooccurrence_scope)}};
  std::string cooc_csv = CsvLine({"effect_class", "frame_a", "frame_b", "units"});
  for (EffectScope effect :
       {EffectScope::kVisible, EffectScope::kInvisible, EffectScope::kAll}) {
    const CooccurrenceMatrix m = Cooccurrence(
        scoped_occurrences, tax.frames, opt.cooccurrence_scope, effect);
    cooc_doc[std::string(EffectScopeName(effect))] = CooccurrenceToJson(m);
    for (size_t i = 0; i < m.frames.size(); ++i) {
      for (size_t j = 0; j < m.frames.size(); ++j) {
        cooc_csv += CsvLine({std::string(EffectScopeName(effect)), m.frames[i],
                             m.frames[j], std::to_string(m.cells[i][j])});
      }
    }
  }

  WriteJson("aggregate/region_aggregates.json", Stage::kAggregate,
            {{"regions", region_docs}});
  WriteText("aggregate/generic_frame_share.csv", generic_csv);
  WriteJson("aggregate/indicator_rate.json", Stage::kAggregate,
            {{"variant", RateVariantName(opt.rate_variant)},
             {"rates", rate_doc},
             {"polarity", polarity_doc},
             {"audit", rate_audit}});
  WriteText("aggregate/indicator_rate.csv", rate_csv);
  WriteJson("aggregate/target_clusters.json", Stage::kAggregate,
            {{"kinds", opt.target_kinds}, {"clusters", clusters_doc}});
  WriteText("aggregate/target_clusters.csv", clusters_csv);
  WriteJson("aggregate/top_words.json", Stage::kAggregate,
            {{"k", opt.top_k}, {"regions", words_doc}});
  WriteText("aggregate/top_words.csv", words_csv);
  std::vector<std::pair<std::string, WordCounts>> columns;
  for (auto &[region, counts] : people_cols) {
    columns.emplace_back("People " + region, counts);
  }
  for (auto &[region, counts] : elite_cols) {
    columns.emplace_back("Elite " + region, counts);
  }
  WriteText("aggregate/top_words_table.txt", FormatWordCountTable(columns));
  WriteJson("aggregate/frame_share.json", Stage::kAggregate,
            {{"regions", frame_share_doc}});
  WriteText("aggregate/frame_share.csv", frame_csv);
  WriteJson("aggregate/role_distribution.json", Stage::kAggregate,
            {{"regions", roles_doc}});
  WriteText("aggregate/role_distribution.csv", roles_csv);
  WriteJson("aggregate/cooccurrence.json", Stage::kAggregate, cooc_doc);
  WriteText("aggregate/cooccurrence.csv", cooc_csv);
  WriteJson("aggregate/temporal.json", Stage::kAggregate,
            {{"bin", TimeBinName(opt.time_bin)}, {"regions", temporal_doc}});
  WriteText("aggregate/temporal.csv", temporal_csv);

  StageOutcome o;
  o.counts = {{"articles", articles.size()},
              {"regions", regions.size()},
              {"assignments", assignments.size()},
              {"instances", total_instances_used},
              {"occurrences", scoped_occurrences.size()}};
  return o;
}

StageOutcome Pipeline::Eval() {
  StageOutcome o;
  if (config_.paths.gold.empty()) {
    o.skipped = true;
    o.skip_reason = "no gold labels configured (paths.gold)";
    return o;
  }
  const GenericInventory &inventory = taxonomies().generic;
  const auto gold =
      LoadGold(config_.paths.gold, config_.paths.gold_format, inventory);
  std::vector<GenericFrameAssignment> predictions;
  for (const auto &r :
       ReadRecords(Input(Stage::kEval, "classify/assignments.jsonl",
                         Stage::kClassifyGeneric, true))) {
    if (r.contains("frames")) {
      predictions.push_back(AssignmentFromJson(r));
    } else {
      GenericFrameAssignment a;
      a.article_id = r.at("article_id").get<std::string>();
      a.frames = r.at("labels").get<std::vector<std::string>>();
      predictions.push_back(std::move(a));
    }
  }
  const PairedLabels paired = PairLabels(gold, predictions);
  if (paired.pairs.empty()) {
    throw std::runtime_error(
        "eval: no article appears in both the gold file and the predictions");
  }
  EvalOptions eval;
  eval.include_none = config_.analysis.eval_include_none;
  const MetricReport report = Evaluate(paired.pairs, inventory, eval);
  json doc = MetricReportToJson(report);
  doc["missing_prediction"] = paired.missing_prediction;
  doc["missing_gold"] = paired.missing_gold;
  WriteJson("eval/metrics.json", Stage::kEval, doc);
  WriteText("eval/metrics_table.txt", FormatMetricTable(report, inventory));
  o.counts = {{"pairs", paired.pairs.size()},
              {"missing_prediction", paired.missing_prediction},
              {"missing_gold", paired.missing_gold}};
  return o;
}

StageOutcome Pipeline::Report() {
  const Taxonomies &tax = taxonomies();
  auto load = [&](const std::string &relative) {
    return ReadJsonFile(
        Input(Stage::kReport, relative, Stage::kAggregate, false));
  };
  const json regions_doc = load("aggregate/region_aggregates.json");
  const json clusters_doc = load("aggregate/target_clusters.json");
  const json frame_doc = load("aggregate/frame_share.json");

  std::vector<std::string> region_names;
  for (const auto &r : regions_doc.at("regions")) {
    region_names.push_back(r.at("region").get<std::string>());
  }
  // One series per region over `categories`, values from `field`.
  auto grouped = [&](const std::string &title, const std::string &value_label,
                     const std::vector<std::string> &categories,
                     const std::function<double(const json &, const std::string &)>
                         &value) {
    GroupedBarChart chart;
    chart.title = title;
    chart.value_label = value_label;
    chart.categories = categories;
    for (const auto &r : regions_doc.at("regions")) {
      std::vector<double> values;
      for (const auto &c : categories) values.push_back(value(r, c));
      chart.series.emplace_back(r.at("region").get<std::string>(), values);
    }
    return chart;
  };
  auto share_of = [](const json &shares, const std::string &key) {
    return shares.contains(key) ? shares.at(key).get<double>() : 0.0;
  };

  std::vector<std::string> generic_labels = tax.generic.labels();
  WriteSvg("report/generic_frames_by_region.svg",
           RenderSvg(grouped("Generic frames per region", "share of labels",
                             generic_labels,
                             [&](const json &r, const std::string &c) {
                               return share_of(r.at("generic_frame_share"), c);
                             }),
                     hash_));
  std::vector<std::string> kinds;
  for (const auto &k : tax.indicators.kinds()) kinds.push_back(k.path);
  WriteSvg("report/indicator_rates_by_region.svg",
           RenderSvg(grouped("War and peace indicators per region",
                             "mean instances per token", kinds,
                             [&](const json &r, const std::string &c) {
                               return share_of(r.at("indicator_rate"), c);
                             }),
                     hash_));

  for (EffectScope scope : {EffectScope::kVisible, EffectScope::kInvisible}) {
    std::vector<std::string> frames;
    for (const auto &f : tax.frames.frames()) {
      if ((scope == EffectScope::kVisible &&
           f.effect_class == EffectClass::kVisible) ||
          (scope == EffectScope::kInvisible &&
           f.effect_class == EffectClass::kInvisible)) {
        frames.push_back(f.name);
      }
    }
    const std::string scope_name(EffectScopeName(scope));
    WriteSvg("report/frame_share_" + scope_name + ".svg",
             RenderSvg(grouped("Semantic frames (" + scope_name + " effects)",
                               "share of occurrences", frames,
                               [&](const json &r, const std::string &c) {
                                 const std::string region =
                                     r.at("region").get<std::string>();
                                 return share_of(frame_doc.at("regions")
                                                     .at(region)
                                                     .at(scope_name),
                                                 c);
                               }),
                       hash_));
  }

  for (const std::string &role : {std::string(kAssailantRole),
                                 std::string(kVictimRole)}) {
    std::set<std::string> groups;
    for (const auto &r : regions_doc.at("regions")) {
      for (const auto &entry : r.at("role_distribution")) {
        if (entry.at("frame") == "*" && entry.at("role") == role) {
          for (const auto &[g, v] : entry.at("groups").items()) groups.insert(g);
        }
      }
    }
    const std::vector<std::string> categories(groups.begin(), groups.end());
    std::string lower = AsciiLower(role);
    WriteSvg("report/role_" + lower + ".svg",
             RenderSvg(grouped(role + " fillers by actor group",
                               "share of filled roles", categories,
                               [&](const json &r, const std::string &c) {
                                 for (const auto &entry :
                                      r.at("role_distribution")) {
                                   if (entry.at("frame") == "*" &&
                                       entry.at("role") == role) {
                                     return share_of(entry.at("groups"), c);
                                   }
                                 }
                                 return 0.0;
                               }),
                       hash_));
  }

  for (const auto &region : region_names) {
    HorizontalBarChart chart;
    chart.title = "Most frequent demonizing/dehumanizing targets (" + region +
                  ")";
    chart.value_label = "instances";
    if (clusters_doc.at("clusters").contains(region)) {
      for (const auto &c : clusters_doc.at("clusters").at(region)) {
        chart.bars.emplace_back(c.at("canonical_label").get<std::string>(),
                                c.at("count").get<double>());
      }
    }
    WriteSvg("report/targets_" + AsciiLower(region) + ".svg",
             RenderSvg(chart, hash_));
  }

  const fs::path words = Input(Stage::kReport, "aggregate/top_words_table.txt",
                               Stage::kAggregate, false);
  WriteTextFile(ArtifactPath("report/top_words_table.txt"),
                ReadTextFile(words));
  artifacts_["report/top_words_table.txt"] = 1;
  if (fs::exists(ArtifactPath("eval/metrics_table.txt"))) {
    WriteTextFile(ArtifactPath("report/metrics_table.txt"),
                  ReadTextFile(ArtifactPath("eval/metrics_table.txt")));
    artifacts_["report/metrics_table.txt"] = 1;
  }
  StageOutcome o;
  o.counts = {{"files", artifacts_.size()}};
  return o;
}

int ExitCodeFor(const std::exception &error) {
  if (dynamic_cast<const UpstreamMissingError *>(&error)) {
    return kExitUpstreamMissing;
  }
  return kExitUsage;
}

}  // namespace framescope
