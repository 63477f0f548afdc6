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

#include "framescope/chat_client.h"

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "httplib.h"

#include "framescope/text.h"

namespace framescope {

void EndpointConfig::Validate(bool require_credential) const {
  if (base_url.empty()) throw std::invalid_argument("endpoint base_url unset");
  if (model.empty()) throw std::invalid_argument("endpoint model unset");
  if (require_credential && api_key.empty()) {
    throw std::invalid_argument(std::string("credential missing: set ") +
                                kApiKeyEnv);
  }
  if (max_attempts < 1) throw std::invalid_argument("max_attempts < 1");
  if (max_in_flight < 1) throw std::invalid_argument("max_in_flight < 1");
  if (backoff_multiplier < 1) {
    throw std::invalid_argument("backoff_multiplier < 1");
  }
}

EndpointConfig EndpointConfigFromJson(const json &value) {
  EndpointConfig c;
  c.base_url = value.value("base_url", c.base_url);
  c.path = value.value("path", c.path);
  c.model = value.value("model", c.model);
  c.max_attempts = value.value("max_attempts", c.max_attempts);
  c.initial_backoff = std::chrono::milliseconds(
      value.value("initial_backoff_ms", c.initial_backoff.count()));
  c.backoff_multiplier =
      value.value("backoff_multiplier", c.backoff_multiplier);
  c.timeout =
      std::chrono::seconds(value.value("timeout_s", c.timeout.count()));
  if (const char *key = std::getenv(kApiKeyEnv)) c.api_key = key;
  return c;
}

json ChatRequestBody(const ChatRequest &request) {
  json messages = json::array();
  if (!request.system_text.empty()) {
    messages.push_back({{"role", "system"}, {"content", request.system_text}});
  }
  messages.push_back({{"role", "user"}, {"content", request.user_text}});
  return json{{"model", request.model},
              {"messages", messages},
              {"temperature", request.temperature},
              {"max_tokens", request.max_output_tokens}};
}

std::optional<std::string> ExtractCompletionContent(std::string_view body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) return std::nullopt;
  if (!doc.is_object() || !doc.contains("choices")) return std::nullopt;
  const json *node = &doc.at("choices");
  if (!node->is_array() || node->empty()) return std::nullopt;
  node = &node->at(0);
  if (!node->is_object() || !node->contains("message")) return std::nullopt;
  node = &node->at("message");
  if (!node->is_object() || !node->contains("content") ||
      !node->at("content").is_string()) {
    return std::nullopt;
  }
  return node->at("content").get<std::string>();
}

ChatClient::ChatClient(EndpointConfig config)
    : config_(std::move(config)),
      sleeper_([](std::chrono::milliseconds d) {
        std::this_thread::sleep_for(d);
      }) {}

size_t ChatClient::peak_in_flight() const {
  std::lock_guard<std::mutex> lock(mu_);
  return peak_in_flight_;
}

std::filesystem::path ChatClient::CachePath(const std::string &body) const {
  return config_.cache_dir / (HexDigest(config_.model + '\n' + body) + ".json");
}

CompletionResult ChatClient::Complete(const ChatRequest &request) {
  request.Validate();
  const std::string body = DumpCanonical(ChatRequestBody(request));

  if (!config_.cache_dir.empty()) {
    const auto path = CachePath(body);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
      json entry = json::parse(ReadTextFile(path), nullptr, false);
      if (!entry.is_discarded() && entry.contains("response") &&
          entry.at("response").is_string()) {
        CompletionResult hit;
        hit.ok = true;
        hit.from_cache = true;
        hit.content = entry.at("response").get<std::string>();
        return hit;
      }
    }
  }

  {
    std::unique_lock<std::mutex> lock(mu_);
    cv_.wait(lock, [&] { return in_flight_ < config_.max_in_flight; });
    ++in_flight_;
    peak_in_flight_ = std::max(peak_in_flight_, in_flight_);
  }
  CompletionResult result = Send(body);
  {
    std::lock_guard<std::mutex> lock(mu_);
    --in_flight_;
  }
  cv_.notify_one();

  if (result.ok && !config_.cache_dir.empty()) {
    json entry{{"model", config_.model},
               {"request", json::parse(body)},
               {"response", result.content}};
    WriteTextFile(CachePath(body), DumpCanonical(entry, 2) + "\n");
  }
  return result;
}

CompletionResult ChatClient::Send(const std::string &body) {
  CompletionResult result;
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_write_timeout(config_.timeout);
  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }

  auto backoff = config_.initial_backoff;
  for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    result.attempts = attempt;
    auto res = client.Post(config_.path, headers, body, "application/json");
    bool retryable;
    if (!res) {
      result.status = 0;
      result.error = "transport error: " + httplib::to_string(res.error());
      retryable = true;
    } else {
      result.status = res->status;
      if (res->status >= 200 && res->status < 300) {
        auto content = ExtractCompletionContent(res->body);
        if (!content) {
          result.error = "response has no choices[0].message.content";
          return result;
        }
        result.ok = true;
        result.error.clear();
        result.content = std::move(*content);
        return result;
      }
      result.error = "HTTP " + std::to_string(res->status);
      retryable = res->status == 429 || res->status >= 500;
    }
    if (!retryable) return result;
    if (attempt < config_.max_attempts) {
      sleeper_(backoff);
      backoff = std::chrono::milliseconds(static_cast<long long>(
          static_cast<double>(backoff.count()) * config_.backoff_multiplier));
    }
  }
  result.error += " (retries exhausted)";
  return result;
}

}  // namespace framescope
