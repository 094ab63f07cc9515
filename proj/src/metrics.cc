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

#include "sentest/metrics.h"

#include <algorithm>
#include <cmath>

#include "sentest/errors.h"

namespace sentest {

double Cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dim() != v.dim()) {
    throw InvalidArgumentError("cosine: dim mismatch (" +
                               std::to_string(u.dim()) + " vs " +
                               std::to_string(v.dim()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double x = u.values[i];
    const double y = v.values[i];
    dot += x * y;
    nu += x * x;
    nv += y * y;
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  // sqrt(nu * nv) rather than sqrt(nu) * sqrt(nv): for u == v this is
  // exactly nu, so identical vectors score exactly 1.
  return std::clamp(dot / std::sqrt(nu * nv), -1.0, 1.0);
}

double AvgPairedCosine(std::span<const EmbeddingVector> a,
                       std::span<const EmbeddingVector> b) {
  if (a.size() != b.size()) {
    throw InvalidArgumentError("avg_paired_cosine: length mismatch");
  }
  if (a.empty()) throw InvalidArgumentError("avg_paired_cosine: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += Cosine(a[i], b[i]);
  return sum / static_cast<double>(a.size());
}

double LabelOverlap(std::span<const std::string> pred_clean,
                    std::span<const std::string> pred_perturbed) {
  if (pred_clean.size() != pred_perturbed.size()) {
    throw InvalidArgumentError("label_overlap: length mismatch");
  }
  if (pred_clean.empty()) throw InvalidArgumentError("label_overlap: empty input");
  std::size_t same = 0;
  for (std::size_t i = 0; i < pred_clean.size(); ++i) {
    same += pred_clean[i] == pred_perturbed[i];
  }
  return static_cast<double>(same) / static_cast<double>(pred_clean.size());
}

}  // namespace sentest
