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

// framescope: command-line driver for the corpus framing pipeline.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framescope/pipeline.h"

namespace {

using framescope::Stage;
using framescope::StageOutcome;

void PrintOutcome(const StageOutcome &o) {
  std::cout << framescope::StageName(o.stage) << ":";
  if (o.skipped) {
    std::cout << " skipped (" << o.skip_reason << ")\n";
    return;
  }
  for (const auto &[k, n] : o.counts) std::cout << " " << k << "=" << n;
  if (o.endpoint_failures > 0) {
    std::cout << " endpoint_failures=" << o.endpoint_failures;
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Framing analysis pipeline for news corpora"};
  app.require_subcommand(1);

  std::string config_path;
  std::string region;
  std::string stage_input;
  std::string mock_endpoint;
  size_t concurrency = 0;
  bool seed_less = false;
  app.add_option("--config", config_path, "Pipeline config (JSON)")
      ->required();
  app.add_option("--region", region, "Restrict aggregate/report to US, UK or ME");
  app.add_option("--stage-input", stage_input,
                 "Replace the primary input artifact of the stage");
  app.add_option("--mock-endpoint", mock_endpoint,
                 "Send model requests to this base URL; no credential needed");
  app.add_option("--concurrency", concurrency,
                 "Override the per-article concurrency bound");
  app.add_flag("--seed-less", seed_less,
               "Accepted for compatibility; no stage uses randomness");

  std::vector<std::string> names;
  for (Stage s : framescope::kAllStages) {
    names.emplace_back(framescope::StageName(s));
  }
  names.emplace_back("run-all");
  for (const auto &name : names) {
    app.add_subcommand(name, name == "run-all" ? "Run every enabled stage"
                                               : "Run the " + name + " stage");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? framescope::kExitOk : framescope::kExitUsage;
  }

  try {
    framescope::PipelineConfig config =
        framescope::LoadPipelineConfig(config_path);
    if (concurrency > 0) {
      config.concurrency = concurrency;
      config.endpoint.max_in_flight = concurrency;
    }
    framescope::RunOptions options;
    if (!region.empty()) {
      try {
        options.region = framescope::ParseRegion(region);
      } catch (const std::invalid_argument &e) {
        throw framescope::ConfigError(e.what());
      }
    }
    if (!stage_input.empty()) options.stage_input = stage_input;
    if (!mock_endpoint.empty()) options.mock_endpoint = mock_endpoint;

    framescope::Pipeline pipeline(std::move(config), options);
    const std::string command = app.get_subcommands().front()->get_name();
    std::vector<StageOutcome> outcomes;
    if (command == "run-all") {
      outcomes = pipeline.RunAll();
    } else {
      outcomes.push_back(pipeline.Run(framescope::ParseStage(command)));
    }
    size_t failures = 0;
    for (const auto &o : outcomes) {
      PrintOutcome(o);
      failures += o.endpoint_failures;
    }
    std::cout << "manifest_hash=" << pipeline.manifest_hash() << "\n";
    if (failures > 0) {
      std::cerr << "error: " << failures
                << " model request(s) failed after the retry budget; rerun "
                   "to retry them (successful responses are cached)\n";
      return framescope::kExitEndpointFailure;
    }
    return framescope::kExitOk;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return framescope::ExitCodeFor(e);
  }
}
