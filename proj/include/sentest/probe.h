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

#ifndef SENTEST_PROBE_H_
#define SENTEST_PROBE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sentest/corpus.h"
#include "sentest/embedding.h"
#include "sentest/heads.h"

namespace sentest {

class EmbeddingCache;

inline constexpr std::size_t kMinProbeCorpusSize = 10;
inline constexpr double kProbeTrainFraction = 0.8;

enum class Split { kTrain, kTest };

// Shuffle-detection dataset: label 1 = words shuffled, 0 = original order.
// Each source sentence appears exactly once.
struct ProbeDataset {
  std::vector<std::string> texts;
  std::vector<int> labels;
  std::vector<Split> split;
  std::vector<std::size_t> source_ids;

  std::size_t size() const { return texts.size(); }
};

struct ProbeOptions {
  // Keep label-0 texts verbatim instead of passing them through CleanText.
  // Casing and punctuation then leak the label.
  bool raw_negatives = false;
};

// Samples are ordered by a Fisher-Yates permutation drawn from
// DeriveStream(seed, 0); the first floor(N/2) are shuffled with
// DeriveStream(seed, 2 + sample id), the rest kept in order. Each class is
// split 80/20 into train/test by DeriveStream(seed, 1). Throws
// InvalidArgumentError for fewer than 10 samples.
ProbeDataset BuildProbeDataset(const Corpus& corpus, std::uint64_t seed,
                               const ProbeOptions& options = {});

struct ProbeResult {
  double nn_accuracy = 0.0;
  double knn_accuracy = 0.0;
  std::string embedder_name;
  std::uint64_t seed = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;

  friend bool operator==(const ProbeResult&, const ProbeResult&) = default;
};

// Embeds the dataset, fits a softmax head and a KNN classifier on the train
// split and scores both on the test split.
ProbeResult RunProbe(const ProbeDataset& dataset, EmbeddingProvider& provider,
                     const TrainConfig& train_cfg, const KnnConfig& knn_cfg,
                     std::uint64_t seed = 0, EmbeddingCache* cache = nullptr);

}  // namespace sentest

#endif  // SENTEST_PROBE_H_
