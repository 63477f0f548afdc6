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

// HTTP transport for OpenAI-style chat-completion endpoints.
//
// Request body:  {"model", "messages": [{"role", "content"}...],
//                 "temperature", "max_tokens"}
// Response body: choices[0].message.content is returned verbatim.
//
// Transport errors, HTTP 429 and 5xx are retried with exponential backoff up
// to max_attempts total attempts; any other 4xx fails immediately. A client
// bounds the number of requests in flight across all calling threads.
// Successful responses are cached on disk keyed by (request hash, model).

#ifndef FRAMESCOPE_CHAT_CLIENT_H_
#define FRAMESCOPE_CHAT_CLIENT_H_

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>

#include "framescope/io.h"
#include "framescope/prompts.h"

namespace framescope {

inline constexpr const char *kApiKeyEnv = "FRAMESCOPE_API_KEY";

struct EndpointConfig {
  // Scheme, host and optional port, e.g. "https://api.example.com".
  std::string base_url;
  std::string path = "/v1/chat/completions";
  std::string model;
  // Sent as a bearer token when non-empty.
  std::string api_key;
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_multiplier = 2.0;
  std::chrono::seconds timeout{120};
  size_t max_in_flight = 4;
  // Empty disables the response cache.
  std::filesystem::path cache_dir;

  // Throws std::invalid_argument for a missing URL/model or bad bounds.
  void Validate(bool require_credential) const;
};

// Reads base_url/path/model/retry settings from a JSON object and the
// credential from FRAMESCOPE_API_KEY.
EndpointConfig EndpointConfigFromJson(const json &value);

struct CompletionResult {
  bool ok = false;
  std::string content;
  int attempts = 0;
  // Last HTTP status seen; 0 for transport errors or cache hits.
  int status = 0;
  bool from_cache = false;
  std::string error;
};

// Builds the JSON request body for `request`.
json ChatRequestBody(const ChatRequest &request);

// Extracts choices[0].message.content; nullopt if absent.
std::optional<std::string> ExtractCompletionContent(std::string_view body);

class ChatClient {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  explicit ChatClient(EndpointConfig config);

  ChatClient(const ChatClient &) = delete;
  ChatClient &operator=(const ChatClient &) = delete;

  // Thread-safe. Never throws for endpoint failures; they come back as
  // ok == false with the attempt count.
  CompletionResult Complete(const ChatRequest &request);

  // Replaces the backoff wait, mainly for tests.
  void set_sleeper(Sleeper sleeper) { sleeper_ = std::move(sleeper); }

  const EndpointConfig &config() const { return config_; }

  // Highest number of simultaneous requests observed so far.
  size_t peak_in_flight() const;

 private:
  CompletionResult Send(const std::string &body);
  std::filesystem::path CachePath(const std::string &body) const;

  EndpointConfig config_;
  Sleeper sleeper_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  size_t in_flight_ = 0;
  size_t peak_in_flight_ = 0;
};

}  // namespace framescope

#endif  // FRAMESCOPE_CHAT_CLIENT_H_
