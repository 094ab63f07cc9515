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

#include "sentest/mock_embedders.h"

#include <cmath>
#include <vector>

#include "sentest/determinism.h"
#include "sentest/errors.h"
#include "sentest/text.h"

namespace sentest {
namespace {

EmbeddingVector Normalize(const std::vector<double>& counts) {
  double sq = 0.0;
  for (double c : counts) sq += c * c;
  std::vector<float> values(counts.size(), 0.0f);
  if (sq > 0.0) {
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      values[i] = static_cast<float>(counts[i] * inv);
    }
  }
  return EmbeddingVector(std::move(values));
}

void CheckDim(std::size_t dim) {
  if (dim == 0) throw InvalidArgumentError("embedding dim must be >= 1");
}

}  // namespace

EmbeddingVector BowEmbed(std::string_view text, std::size_t dim) {
  CheckDim(dim);
  std::vector<double> counts(dim, 0.0);
  const std::string cleaned = CleanText(text);
  for (std::string_view token : SplitWhitespaceViews(cleaned)) {
    counts[Fnv1a64(token) % dim] += 1.0;
  }
  return Normalize(counts);
}

EmbeddingVector BigramEmbed(std::string_view text, std::size_t dim) {
  CheckDim(dim);
  const std::string cleaned = CleanText(text);
  std::vector<std::string_view> tokens = {"<s>"};
  for (std::string_view t : SplitWhitespaceViews(cleaned)) tokens.push_back(t);
  tokens.push_back("</s>");

  std::vector<double> counts(dim, 0.0);
  std::string pair;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    pair.assign(tokens[i]);
    pair.push_back('\x01');
    pair.append(tokens[i + 1]);
    counts[Fnv1a64(pair) % dim] += 1.0;
  }
  return Normalize(counts);
}

BowEmbedder::BowEmbedder(std::size_t dim) : dim_(dim) { CheckDim(dim); }

std::string BowEmbedder::name() const {
  return "mock-bow:" + std::to_string(dim_);
}

std::vector<EmbeddingVector> BowEmbedder::DoEmbed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(BowEmbed(t, dim_));
  return out;
}

BigramEmbedder::BigramEmbedder(std::size_t dim) : dim_(dim) { CheckDim(dim); }

std::string BigramEmbedder::name() const {
  return "mock-bigram:" + std::to_string(dim_);
}

std::vector<EmbeddingVector> BigramEmbedder::DoEmbed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(BigramEmbed(t, dim_));
  return out;
}

}  // namespace sentest
