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

#include "sentest/heads.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "sentest/errors.h"

namespace sentest {
namespace {

using nlohmann::json;

void CheckSameLength(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidArgumentError(std::string(what) + ": length mismatch (" +
                               std::to_string(a) + " vs " +
                               std::to_string(b) + ")");
  }
}

void CheckDims(std::span<const EmbeddingVector> embs, std::size_t dim,
               const char* what) {
  for (std::size_t i = 0; i < embs.size(); ++i) {
    if (embs[i].dim() != dim) {
      throw InvalidArgumentError(std::string(what) + ": vector " +
                                 std::to_string(i) + " has dim " +
                                 std::to_string(embs[i].dim()) +
                                 ", expected " + std::to_string(dim));
    }
  }
}

std::size_t ArgMax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

// In-place softmax that is stable for large logits.
void Softmax(std::vector<double>& z) {
  const double m = *std::max_element(z.begin(), z.end());
  double total = 0.0;
  for (double& v : z) {
    v = std::exp(v - m);
    total += v;
  }
  for (double& v : z) v /= total;
}

double CosineSimilarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double x = a.values[i];
    const double y = b.values[i];
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / std::sqrt(na * nb);
}

}  // namespace

LinearHead MakeZeroHead(std::vector<std::string> label_names,
                        std::size_t dim) {
  std::sort(label_names.begin(), label_names.end());
  label_names.erase(std::unique(label_names.begin(), label_names.end()),
                    label_names.end());
  if (label_names.size() < 2) {
    throw InvalidArgumentError("a classifier head needs at least 2 labels");
  }
  if (dim == 0) throw InvalidArgumentError("head dim must be >= 1");
  LinearHead head;
  head.label_names = std::move(label_names);
  head.dim = dim;
  head.weights.assign(head.num_classes() * dim, 0.0);
  head.bias.assign(head.num_classes(), 0.0);
  return head;
}

std::vector<double> Logits(const LinearHead& head, const EmbeddingVector& x) {
  std::vector<double> z(head.bias);
  for (std::size_t c = 0; c < head.num_classes(); ++c) {
    const double* w = &head.weights[c * head.dim];
    double acc = 0.0;
    for (std::size_t j = 0; j < head.dim; ++j) acc += w[j] * x.values[j];
    z[c] += acc;
  }
  return z;
}

double SoftmaxObjective(const LinearHead& head, const EncodedDataset& data,
                        double l2, std::vector<double>* grad_weights,
                        std::vector<double>* grad_bias) {
  const std::size_t n = data.inputs.size();
  const std::size_t classes = head.num_classes();
  const std::size_t d = head.dim;
  if (grad_weights) grad_weights->assign(classes * d, 0.0);
  if (grad_bias) grad_bias->assign(classes, 0.0);

  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const EmbeddingVector& x = data.inputs[i];
    std::vector<double> z = Logits(head, x);
    const double m = *std::max_element(z.begin(), z.end());
    double total = 0.0;
    for (double v : z) total += std::exp(v - m);
    loss += (m + std::log(total)) - z[data.targets[i]];
    if (!grad_weights && !grad_bias) continue;
    Softmax(z);
    z[data.targets[i]] -= 1.0;
    for (std::size_t c = 0; c < classes; ++c) {
      const double g = z[c] / static_cast<double>(n);
      if (grad_bias) (*grad_bias)[c] += g;
      if (grad_weights) {
        double* gw = &(*grad_weights)[c * d];
        for (std::size_t j = 0; j < d; ++j) gw[j] += g * x.values[j];
      }
    }
  }
  loss /= static_cast<double>(n);

  double sq = 0.0;
  for (double w : head.weights) sq += w * w;
  loss += 0.5 * l2 * sq;
  if (grad_weights) {
    for (std::size_t k = 0; k < head.weights.size(); ++k) {
      (*grad_weights)[k] += l2 * head.weights[k];
    }
  }
  return loss;
}

LinearHead TrainLinearHead(std::span<const EmbeddingVector> embs,
                           std::span<const std::string> labels,
                           const TrainConfig& cfg,
                           std::vector<double>* loss_trace) {
  CheckSameLength(embs.size(), labels.size(), "train_linear_head");
  if (embs.empty()) throw InvalidArgumentError("train_linear_head: no data");
  if (!(cfg.learning_rate > 0.0) || !(cfg.l2 >= 0.0)) {
    throw InvalidArgumentError("train_linear_head: bad learning rate or l2");
  }
  const std::size_t dim = embs.front().dim();
  CheckDims(embs, dim, "train_linear_head");

  LinearHead head = MakeZeroHead({labels.begin(), labels.end()}, dim);
  EncodedDataset data{embs, {}};
  data.targets.reserve(labels.size());
  for (const std::string& label : labels) {
    auto it = std::lower_bound(head.label_names.begin(),
                               head.label_names.end(), label);
    data.targets.push_back(
        static_cast<std::size_t>(it - head.label_names.begin()));
  }

  std::vector<double> gw;
  std::vector<double> gb;
  if (loss_trace) loss_trace->clear();
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const double loss = SoftmaxObjective(head, data, cfg.l2, &gw, &gb);
    if (loss_trace) loss_trace->push_back(loss);
    for (std::size_t k = 0; k < gw.size(); ++k) {
      head.weights[k] -= cfg.learning_rate * gw[k];
    }
    for (std::size_t c = 0; c < gb.size(); ++c) {
      head.bias[c] -= cfg.learning_rate * gb[c];
    }
  }
  if (loss_trace) {
    loss_trace->push_back(
        SoftmaxObjective(head, data, cfg.l2, nullptr, nullptr));
  }
  return head;
}

std::vector<std::string> Predict(const LinearHead& head,
                                 std::span<const EmbeddingVector> embs) {
  CheckDims(embs, head.dim, "predict");
  std::vector<std::string> out;
  out.reserve(embs.size());
  for (const EmbeddingVector& x : embs) {
    out.push_back(head.label_names[ArgMax(Logits(head, x))]);
  }
  return out;
}

std::vector<std::string> KnnPredict(std::span<const EmbeddingVector> train_embs,
                                    std::span<const std::string> train_labels,
                                    const KnnConfig& cfg,
                                    std::span<const EmbeddingVector> queries) {
  CheckSameLength(train_embs.size(), train_labels.size(), "knn_predict");
  if (cfg.k == 0) throw InvalidArgumentError("knn_predict: k must be >= 1");
  if (train_embs.size() < cfg.k) {
    throw InvalidArgumentError("knn_predict: " +
                               std::to_string(train_embs.size()) +
                               " training points for k=" +
                               std::to_string(cfg.k));
  }
  const std::size_t dim = train_embs.front().dim();
  CheckDims(train_embs, dim, "knn_predict");
  CheckDims(queries, dim, "knn_predict");

  std::vector<std::string> label_names(train_labels.begin(),
                                       train_labels.end());
  std::sort(label_names.begin(), label_names.end());
  label_names.erase(std::unique(label_names.begin(), label_names.end()),
                    label_names.end());
  std::vector<std::size_t> label_of(train_labels.size());
  for (std::size_t i = 0; i < train_labels.size(); ++i) {
    label_of[i] = static_cast<std::size_t>(
        std::lower_bound(label_names.begin(), label_names.end(),
                         train_labels[i]) -
        label_names.begin());
  }

  std::vector<std::string> out;
  out.reserve(queries.size());
  std::vector<std::pair<double, std::size_t>> scored(train_embs.size());
  std::vector<std::size_t> votes(label_names.size());
  for (const EmbeddingVector& q : queries) {
    for (std::size_t i = 0; i < train_embs.size(); ++i) {
      scored[i] = {CosineSimilarity(q, train_embs[i]), i};
    }
    std::partial_sort(scored.begin(), scored.begin() + cfg.k, scored.end(),
                      [](const auto& a, const auto& b) {
                        return a.first != b.first ? a.first > b.first
                                                  : a.second < b.second;
                      });
    std::fill(votes.begin(), votes.end(), 0);
    for (std::size_t r = 0; r < cfg.k; ++r) ++votes[label_of[scored[r].second]];
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c) {
      if (votes[c] > votes[best]) best = c;
    }
    out.push_back(label_names[best]);
  }
  return out;
}

double Accuracy(std::span<const std::string> pred,
                std::span<const std::string> gold) {
  CheckSameLength(pred.size(), gold.size(), "accuracy");
  if (pred.empty()) throw InvalidArgumentError("accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) hits += pred[i] == gold[i];
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

double MacroF1(std::span<const std::string> pred,
               std::span<const std::string> gold,
               std::span<const std::string> labels) {
  CheckSameLength(pred.size(), gold.size(), "macro_f1");
  if (labels.empty()) throw InvalidArgumentError("macro_f1: no labels");
  const std::set<std::string> label_set(labels.begin(), labels.end());
  for (const std::string& g : gold) {
    if (!label_set.count(g)) {
      throw InvalidArgumentError("macro_f1: gold label \"" + g +
                                 "\" missing from label set");
    }
  }
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Counts> counts;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == gold[i]) {
      ++counts[gold[i]].tp;
    } else {
      ++counts[pred[i]].fp;
      ++counts[gold[i]].fn;
    }
  }
  double sum = 0.0;
  for (const std::string& label : label_set) {
    const Counts c = counts[label];
    const std::size_t denom = 2 * c.tp + c.fp + c.fn;
    // F1 = 2PR / (P + R) = 2tp / (2tp + fp + fn).
    if (c.tp > 0 && denom > 0) {
      sum += 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
    }
  }
  return sum / static_cast<double>(label_set.size());
}

std::string LinearHead::ToJson() const {
  json rows = json::array();
  for (std::size_t c = 0; c < num_classes(); ++c) {
    rows.push_back(std::vector<double>(weights.begin() + c * dim,
                                       weights.begin() + (c + 1) * dim));
  }
  json doc = {{"labels", label_names},
              {"dim", dim},
              {"weights", std::move(rows)},
              {"bias", bias}};
  return doc.dump();
}

LinearHead LinearHead::FromJson(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ParseError(0, "head: not a JSON object");
  }
  try {
    LinearHead head = MakeZeroHead(doc.at("labels").get<std::vector<std::string>>(),
                                   doc.at("dim").get<std::size_t>());
    if (head.label_names != doc.at("labels").get<std::vector<std::string>>()) {
      throw ValidationError("head: labels must be sorted and distinct");
    }
    const auto rows = doc.at("weights").get<std::vector<std::vector<double>>>();
    const auto bias = doc.at("bias").get<std::vector<double>>();
    if (rows.size() != head.num_classes() || bias.size() != head.num_classes()) {
      throw ValidationError("head: weights/bias do not match label count");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (rows[c].size() != head.dim) {
        throw ValidationError("head: weight row " + std::to_string(c) +
                              " does not have dim " + std::to_string(head.dim));
      }
      std::copy(rows[c].begin(), rows[c].end(),
                head.weights.begin() + c * head.dim);
    }
    head.bias = bias;
    return head;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("head: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw ValidationError(std::string("head: ") + e.what());
  }
}

}  // namespace sentest
