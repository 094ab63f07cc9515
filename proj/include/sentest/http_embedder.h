// Copyright 2026 The Sentest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SENTEST_HTTP_EMBEDDER_H_
#define SENTEST_HTTP_EMBEDDER_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <string>

#include "sentest/embedding.h"

namespace sentest {

// Environment variable holding the default embedding endpoint.
inline constexpr const char* kEmbedUrlEnv = "SENTEST_EMBED_URL";

struct HttpEmbedderOptions {
  std::string endpoint;  // e.g. http://127.0.0.1:8080 or http://host/prefix
  std::string model;
  std::size_t batch_size = 32;
  // Expected dimension; 0 accepts whatever the first response declares.
  std::size_t dim = 0;
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{250};
  std::chrono::seconds timeout{60};
  std::size_t max_text_length = kDefaultMaxTextLength;
};

// Client for the embedding wire protocol:
//
//   POST {endpoint}/embed   {"model": m, "texts": [...]}
//     200 {"model": m, "dim": d, "embeddings": [[...], ...]}
//   GET  {endpoint}/health  200 {"status": "ok", "model": m}
//
// Transport failures and 5xx are retried up to max_retries times with
// exponential backoff. 400 raises RequestError immediately. 413 splits the
// batch in half and retries each half, down to single texts. A response
// that breaks the schema (wrong count, wrong or inconsistent dim,
// non-numeric or non-finite values) raises ProtocolError.
class HttpEmbedder : public EmbeddingProvider {
 public:
  // Throws ConfigError for a missing model, an unusable endpoint or
  // batch_size == 0.
  explicit HttpEmbedder(HttpEmbedderOptions options);

  std::string name() const override { return "http:" + options_.model; }
  std::size_t dim() const override { return dim_.load(); }
  std::size_t max_text_length() const override {
    return options_.max_text_length;
  }

  // Returns the model reported by GET /health.
  std::string Health() const;

  // HTTP requests issued so far, retries included.
  std::size_t requests() const { return requests_.load(); }

 protected:
  std::vector<EmbeddingVector> DoEmbed(
      std::span<const std::string> texts) override;

 private:
  void SendBatch(std::span<const std::string> texts, std::size_t offset,
                 std::vector<EmbeddingVector>* out);
  std::vector<EmbeddingVector> ParseResponse(const std::string& body,
                                             std::size_t expected_count);

  HttpEmbedderOptions options_;
  std::string host_;  // scheme://host:port
  std::string path_prefix_;
  std::atomic<std::size_t> dim_{0};
  std::atomic<std::size_t> requests_{0};
};

}  // namespace sentest

#endif  // SENTEST_HTTP_EMBEDDER_H_
