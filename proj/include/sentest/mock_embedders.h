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

#ifndef SENTEST_MOCK_EMBEDDERS_H_
#define SENTEST_MOCK_EMBEDDERS_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "sentest/embedding.h"

namespace sentest {

inline constexpr std::size_t kDefaultBowDim = 256;
inline constexpr std::size_t kDefaultBigramDim = 512;

// Hashed bag of words over CleanText(text): bucket = fnv1a64(token) % dim,
// counts L2-normalized. No tokens gives the zero vector. Order-blind.
EmbeddingVector BowEmbed(std::string_view text, std::size_t dim = kDefaultBowDim);

// Hashed bigrams over "<s>" + tokens + "</s>", each pair joined by 0x01.
// Sensitive to word order.
EmbeddingVector BigramEmbed(std::string_view text,
                            std::size_t dim = kDefaultBigramDim);

class BowEmbedder : public EmbeddingProvider {
 public:
  explicit BowEmbedder(std::size_t dim = kDefaultBowDim);
  std::string name() const override;
  std::size_t dim() const override { return dim_; }

 protected:
  std::vector<EmbeddingVector> DoEmbed(
      std::span<const std::string> texts) override;

 private:
  std::size_t dim_;
};

class BigramEmbedder : public EmbeddingProvider {
 public:
  explicit BigramEmbedder(std::size_t dim = kDefaultBigramDim);
  std::string name() const override;
  std::size_t dim() const override { return dim_; }

 protected:
  std::vector<EmbeddingVector> DoEmbed(
      std::span<const std::string> texts) override;

 private:
  std::size_t dim_;
};

}  // namespace sentest

#endif  // SENTEST_MOCK_EMBEDDERS_H_
