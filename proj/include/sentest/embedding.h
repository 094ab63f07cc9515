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

#ifndef SENTEST_EMBEDDING_H_
#define SENTEST_EMBEDDING_H_

#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sentest {

class EmbeddingCache;

struct EmbeddingVector {
  std::vector<float> values;

  EmbeddingVector() = default;
  explicit EmbeddingVector(std::vector<float> v) : values(std::move(v)) {}

  std::size_t dim() const { return values.size(); }
  bool AllFinite() const;
  // Euclidean norm, accumulated in double.
  double Norm() const;

  friend bool operator==(const EmbeddingVector&,
                         const EmbeddingVector&) = default;
};

inline constexpr std::size_t kDefaultMaxTextLength = 8192;

// Source of sentence embeddings. Implementations must return one vector
// per input in input order, equal vectors for equal texts within a session,
// and must tolerate concurrent Embed calls.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  // Cache namespace; must change whenever the output would change.
  virtual std::string name() const = 0;
  // Vector dimension, or 0 while it is still unknown (remote providers
  // learn it from the first response).
  virtual std::size_t dim() const = 0;
  virtual std::size_t max_text_length() const { return kDefaultMaxTextLength; }

  std::vector<EmbeddingVector> Embed(std::span<const std::string> texts) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return DoEmbed(texts);
  }

  // Number of Embed invocations so far.
  std::size_t calls() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual std::vector<EmbeddingVector> DoEmbed(
      std::span<const std::string> texts) = 0;

 private:
  std::atomic<std::size_t> calls_{0};
};

// Embeds `texts`, serving what it can from `cache` (may be null) and
// sending the distinct remaining texts to the provider in one call. Misses
// are written back. Errors: InvalidArgumentError for an empty list or a
// text over the provider's length limit, ProtocolError when a vector's
// dimension differs from the session dimension.
std::vector<EmbeddingVector> EmbedBatch(EmbeddingProvider& provider,
                                        std::span<const std::string> texts,
                                        EmbeddingCache* cache = nullptr);

}  // namespace sentest

#endif  // SENTEST_EMBEDDING_H_
