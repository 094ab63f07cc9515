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

#ifndef SENTEST_METRICS_H_
#define SENTEST_METRICS_H_

#include <span>
#include <string>

#include "sentest/embedding.h"

namespace sentest {

// dot(u, v) / (|u| |v|) in double precision, clamped to [-1, 1]. Zero when
// either vector is all zeros. Throws InvalidArgumentError on a dim mismatch.
double Cosine(const EmbeddingVector& u, const EmbeddingVector& v);

// Mean of Cosine(a[i], b[i]).
double AvgPairedCosine(std::span<const EmbeddingVector> a,
                       std::span<const EmbeddingVector> b);

// Fraction of positions where the two prediction lists agree.
double LabelOverlap(std::span<const std::string> pred_clean,
                    std::span<const std::string> pred_perturbed);

// One line of the robustness table.
struct RobustnessRow {
  std::string attack;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double overlap = 0.0;
  double avg_cosine = 0.0;

  friend bool operator==(const RobustnessRow&, const RobustnessRow&) = default;
};

}  // namespace sentest

#endif  // SENTEST_METRICS_H_
