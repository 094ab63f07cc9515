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

#ifndef SENTEST_PERTURB_H_
#define SENTEST_PERTURB_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sentest/corpus.h"
#include "sentest/determinism.h"
#include "sentest/keyboard.h"
#include "sentest/lexicon.h"

namespace sentest {

enum class AttackKind { kShuffle, kKeyboard, kSynonym, kIdentity };

// kCharFraction picks ceil(rate * letters) letter positions across the
// whole text. kWordFraction picks ceil(rate * words) words and replaces one
// letter in each.
enum class KeyboardMode { kCharFraction, kWordFraction };

const char* AttackKindName(AttackKind kind);
AttackKind ParseAttackKind(std::string_view name);  // throws ConfigError
const char* KeyboardModeName(KeyboardMode mode);
KeyboardMode ParseKeyboardMode(std::string_view name);  // throws ConfigError

inline constexpr double kDefaultKeyboardRate = 0.05;
inline constexpr double kDefaultSynonymRate = 0.20;

double DefaultRate(AttackKind kind);

struct AttackConfig {
  AttackKind kind = AttackKind::kIdentity;
  double rate = 0.0;  // ignored by shuffle and identity
  KeyboardMode keyboard_mode = KeyboardMode::kCharFraction;
  std::uint64_t seed = 0;

  static AttackConfig For(AttackKind kind, std::uint64_t seed = 0) {
    return AttackConfig{kind, DefaultRate(kind), KeyboardMode::kCharFraction,
                        seed};
  }
};

struct Perturbation {
  std::string text;
  std::size_t edits = 0;
};

struct PerturbedSample {
  std::size_t id = 0;
  std::string label;
  std::string original_text;
  std::string perturbed_text;
  std::size_t edits = 0;
};

// Non-owning. A null keyboard falls back to the built-in QWERTY map; the
// synonym attack requires both thesaurus and pos.
struct AttackResources {
  const KeyboardMap* keyboard = nullptr;
  const Thesaurus* thesaurus = nullptr;
  const PosLexicon* pos = nullptr;
};

// Number of units a rate selects: ceil(rate * count), where products within
// 1e-9 of an integer are treated as that integer so that 0.07 * 100 gives 7.
std::size_t RateBudget(double rate, std::size_t count);

// k distinct indices from [0, n), uniform, returned ascending. Consumes
// exactly k draws (partial Fisher-Yates).
std::vector<std::size_t> SampleWithoutReplacement(std::size_t n,
                                                  std::size_t k,
                                                  RngStream& stream);

// Fisher-Yates over `items`, i = N-1 down to 1, j = Bounded(i + 1).
template <typename T>
void FisherYates(std::vector<T>& items, RngStream& stream) {
  for (std::size_t i = items.size(); i-- > 1;) {
    const std::size_t j = static_cast<std::size_t>(stream.Bounded(i + 1));
    std::swap(items[i], items[j]);
  }
}

// Shuffles the words of CleanText(text). Edits = number of word positions
// whose word changed.
Perturbation ShuffleWords(std::string_view text, RngStream& stream);

// Replaces letters of CleanText(text) with keyboard neighbors. Only
// characters that are keys of `map` are eligible. Throws
// InvalidArgumentError when rate is outside [0, 1].
Perturbation KeyboardPerturb(std::string_view text, double rate,
                             KeyboardMode mode, const KeyboardMap& map,
                             RngStream& stream);

// Replaces ADJ/ADV thesaurus words in the raw text. Tokens are whitespace
// split; a token's surrounding ASCII punctuation is kept and only its core
// is matched and substituted. Spacing is preserved verbatim.
Perturbation SynonymPerturb(std::string_view text, double rate,
                            const Thesaurus& thesaurus, const PosLexicon& pos,
                            RngStream& stream);

Perturbation PerturbText(std::string_view text, const AttackConfig& config,
                         const AttackResources& resources, RngStream& stream);

// Applies the attack to every sample with DeriveStream(config.seed, id).
// Throws ConfigError if the synonym attack lacks its resources.
std::vector<PerturbedSample> PerturbCorpus(const Corpus& corpus,
                                           const AttackConfig& config,
                                           const AttackResources& resources);

}  // namespace sentest

#endif  // SENTEST_PERTURB_H_
