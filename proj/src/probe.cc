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

#include "sentest/probe.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sentest/determinism.h"
#include "sentest/errors.h"
#include "sentest/perturb.h"
#include "sentest/text.h"

namespace sentest {

ProbeDataset BuildProbeDataset(const Corpus& corpus, std::uint64_t seed,
                               const ProbeOptions& options) {
  const std::size_t n = corpus.size();
  if (n < kMinProbeCorpusSize) {
    throw InvalidArgumentError("probe needs at least " +
                               std::to_string(kMinProbeCorpusSize) +
                               " samples, got " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  RngStream perm_stream = DeriveStream(seed, 0);
  FisherYates(order, perm_stream);

  ProbeDataset ds;
  const std::size_t num_shuffled = n / 2;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const Sample& s = corpus.samples[order[pos]];
    if (pos < num_shuffled) {
      RngStream stream = DeriveStream(seed, 2 + s.id);
      ds.texts.push_back(ShuffleWords(s.text, stream).text);
      ds.labels.push_back(1);
    } else {
      ds.texts.push_back(options.raw_negatives ? s.text : CleanText(s.text));
      ds.labels.push_back(0);
    }
    ds.source_ids.push_back(s.id);
  }

  ds.split.assign(n, Split::kTest);
  RngStream split_stream = DeriveStream(seed, 1);
  for (int label : {0, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (ds.labels[i] == label) members.push_back(i);
    }
    FisherYates(members, split_stream);
    const auto rounded = static_cast<std::size_t>(
        std::llround(kProbeTrainFraction * static_cast<double>(members.size())));
    const std::size_t n_train = std::clamp<std::size_t>(rounded, 1, members.size() - 1);
    for (std::size_t r = 0; r < n_train; ++r) ds.split[members[r]] = Split::kTrain;
  }
  return ds;
}

ProbeResult RunProbe(const ProbeDataset& dataset, EmbeddingProvider& provider,
                     const TrainConfig& train_cfg, const KnnConfig& knn_cfg,
                     std::uint64_t seed, EmbeddingCache* cache) {
  const std::vector<EmbeddingVector> embs =
      EmbedBatch(provider, dataset.texts, cache);

  std::vector<EmbeddingVector> train_x, test_x;
  std::vector<std::string> train_y, test_y;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const std::string label = std::to_string(dataset.labels[i]);
    if (dataset.split[i] == Split::kTrain) {
      train_x.push_back(embs[i]);
      train_y.push_back(label);
    } else {
      test_x.push_back(embs[i]);
      test_y.push_back(label);
    }
  }
  if (test_x.empty()) throw InvalidArgumentError("probe: empty test split");

  const LinearHead head = TrainLinearHead(train_x, train_y, train_cfg);
  ProbeResult result;
  result.nn_accuracy = Accuracy(Predict(head, test_x), test_y);
  result.knn_accuracy =
      Accuracy(KnnPredict(train_x, train_y, knn_cfg, test_x), test_y);
  result.embedder_name = provider.name();
  result.seed = seed;
  result.train_size = train_x.size();
  result.test_size = test_x.size();
  return result;
}

}  // namespace sentest
