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

#ifndef SENTEST_HEADS_H_
#define SENTEST_HEADS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentest/embedding.h"

namespace sentest {

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t epochs = 200;
  double l2 = 1e-4;
};

enum class KnnMetric { kCosine };

struct KnnConfig {
  std::size_t k = 5;
  KnnMetric metric = KnnMetric::kCosine;
};

// Single affine layer followed by softmax. weights is row-major C x d.
struct LinearHead {
  std::vector<std::string> label_names;  // sorted, distinct
  std::size_t dim = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  std::size_t num_classes() const { return label_names.size(); }
  double weight(std::size_t c, std::size_t j) const {
    return weights[c * dim + j];
  }

  // {"labels": [...], "dim": d, "weights": [[...], ...], "bias": [...]}
  std::string ToJson() const;
  // Throws ParseError / ValidationError on malformed input.
  static LinearHead FromJson(std::string_view text);

  friend bool operator==(const LinearHead&, const LinearHead&) = default;
};

// Zero-initialized head for the given labels. Throws InvalidArgumentError
// if fewer than two distinct labels or dim == 0.
LinearHead MakeZeroHead(std::vector<std::string> label_names, std::size_t dim);

// Training set with labels encoded as indices into head.label_names.
struct EncodedDataset {
  std::span<const EmbeddingVector> inputs;
  std::vector<std::size_t> targets;
};

// Mean cross-entropy over the dataset plus (l2 / 2) * ||W||^2 (the bias is
// not penalized). If `grad_weights` / `grad_bias` are non-null they receive
// the gradient, laid out like the head's parameters.
double SoftmaxObjective(const LinearHead& head, const EncodedDataset& data,
                        double l2, std::vector<double>* grad_weights,
                        std::vector<double>* grad_bias);

// Softmax regression by full-batch gradient descent from a zero
// initialization, for exactly cfg.epochs steps. Deterministic: no seed.
// If `loss_trace` is non-null it receives the objective before the first
// step and after every step (epochs + 1 values).
LinearHead TrainLinearHead(std::span<const EmbeddingVector> embs,
                           std::span<const std::string> labels,
                           const TrainConfig& cfg,
                           std::vector<double>* loss_trace = nullptr);

// Class scores W x + b.
std::vector<double> Logits(const LinearHead& head, const EmbeddingVector& x);

// Argmax of the logits; ties go to the lowest label index.
std::vector<std::string> Predict(const LinearHead& head,
                                 std::span<const EmbeddingVector> embs);

// Majority vote of the k most cosine-similar training points. Similarity
// ties prefer the lower training index; vote ties prefer the
// lexicographically smallest label. Throws InvalidArgumentError when there
// are fewer than k training points.
std::vector<std::string> KnnPredict(std::span<const EmbeddingVector> train_embs,
                                    std::span<const std::string> train_labels,
                                    const KnnConfig& cfg,
                                    std::span<const EmbeddingVector> queries);

double Accuracy(std::span<const std::string> pred,
                std::span<const std::string> gold);

// Unweighted mean of per-label F1 over `labels`; a label whose precision
// and recall are both zero (or undefined) scores 0.
double MacroF1(std::span<const std::string> pred,
               std::span<const std::string> gold,
               std::span<const std::string> labels);

}  // namespace sentest

#endif  // SENTEST_HEADS_H_
