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

#include "sentest/perturb.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sentest/errors.h"
#include "sentest/text.h"

namespace sentest {
namespace {

void CheckRate(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw InvalidArgumentError("rate must lie in [0, 1], got " +
                               std::to_string(rate));
  }
}

char ReplaceWithNeighbor(char c, const KeyboardMap& map, RngStream& stream) {
  const std::vector<char>& neighbors = map.Neighbors(c);
  return neighbors[static_cast<std::size_t>(stream.Bounded(neighbors.size()))];
}

}  // namespace

const char* AttackKindName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kShuffle: return "shuffle";
    case AttackKind::kKeyboard: return "keyboard";
    case AttackKind::kSynonym: return "synonym";
    case AttackKind::kIdentity: return "identity";
  }
  return "identity";
}

AttackKind ParseAttackKind(std::string_view name) {
  if (name == "shuffle") return AttackKind::kShuffle;
  if (name == "keyboard") return AttackKind::kKeyboard;
  if (name == "synonym") return AttackKind::kSynonym;
  if (name == "identity") return AttackKind::kIdentity;
  throw ConfigError("unknown attack: " + std::string(name));
}

const char* KeyboardModeName(KeyboardMode mode) {
  return mode == KeyboardMode::kCharFraction ? "char_fraction"
                                             : "word_fraction";
}

KeyboardMode ParseKeyboardMode(std::string_view name) {
  if (name == "char_fraction") return KeyboardMode::kCharFraction;
  if (name == "word_fraction") return KeyboardMode::kWordFraction;
  throw ConfigError("unknown keyboard mode: " + std::string(name));
}

double DefaultRate(AttackKind kind) {
  switch (kind) {
    case AttackKind::kKeyboard: return kDefaultKeyboardRate;
    case AttackKind::kSynonym: return kDefaultSynonymRate;
    default: return 0.0;
  }
}

std::size_t RateBudget(double rate, std::size_t count) {
  const double exact = rate * static_cast<double>(count);
  const double nearest = std::round(exact);
  const double k =
      std::fabs(exact - nearest) < 1e-9 ? nearest : std::ceil(exact);
  return std::min(count, static_cast<std::size_t>(std::max(0.0, k)));
}

std::vector<std::size_t> SampleWithoutReplacement(std::size_t n,
                                                  std::size_t k,
                                                  RngStream& stream) {
  if (k > n) throw InvalidArgumentError("sample size exceeds population");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.Bounded(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Perturbation ShuffleWords(std::string_view text, RngStream& stream) {
  const std::vector<std::string> original = SplitWhitespace(CleanText(text));
  std::vector<std::string> words = original;
  FisherYates(words, stream);
  Perturbation out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] != original[i]) ++out.edits;
  }
  out.text = JoinWords(words);
  return out;
}

Perturbation KeyboardPerturb(std::string_view text, double rate,
                             KeyboardMode mode, const KeyboardMap& map,
                             RngStream& stream) {
  CheckRate(rate);
  Perturbation out{CleanText(text), 0};
  std::string& s = out.text;

  if (mode == KeyboardMode::kCharFraction) {
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (map.HasKey(s[i])) letters.push_back(i);
    }
    const std::size_t k = RateBudget(rate, letters.size());
    for (std::size_t pick : SampleWithoutReplacement(letters.size(), k, stream)) {
      char& c = s[letters[pick]];
      c = ReplaceWithNeighbor(c, map, stream);
      ++out.edits;
    }
    return out;
  }

  // Word mode: budget counts all words, but only words holding at least one
  // key can be edited.
  struct Span {
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Span> words;
  for (std::size_t i = 0; i < s.size();) {
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > b) words.push_back({b, i});
  }
  std::vector<std::vector<std::size_t>> candidates;
  for (const Span& w : words) {
    std::vector<std::size_t> letters;
    for (std::size_t i = w.begin; i < w.end; ++i) {
      if (map.HasKey(s[i])) letters.push_back(i);
    }
    if (!letters.empty()) candidates.push_back(std::move(letters));
  }
  const std::size_t k =
      std::min(RateBudget(rate, words.size()), candidates.size());
  for (std::size_t pick :
       SampleWithoutReplacement(candidates.size(), k, stream)) {
    const auto& letters = candidates[pick];
    char& c =
        s[letters[static_cast<std::size_t>(stream.Bounded(letters.size()))]];
    c = ReplaceWithNeighbor(c, map, stream);
    ++out.edits;
  }
  return out;
}

Perturbation SynonymPerturb(std::string_view text, double rate,
                            const Thesaurus& thesaurus, const PosLexicon& pos,
                            RngStream& stream) {
  CheckRate(rate);
  const std::vector<std::string_view> tokens = SplitWhitespaceViews(text);

  struct Candidate {
    std::size_t offset;  // byte offset of the core within `text`
    std::size_t length;
    const std::vector<std::string>* synonyms;
  };
  std::vector<Candidate> eligible;
  for (std::string_view token : tokens) {
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && IsAsciiPunct(token[b])) ++b;
    while (e > b && IsAsciiPunct(token[e - 1])) --e;
    if (b == e) continue;
    const std::string core = Utf8Lower(token.substr(b, e - b));
    const auto* synonyms = thesaurus.Find(core);
    if (synonyms == nullptr || !pos.IsAdjOrAdv(core)) continue;
    const auto offset =
        static_cast<std::size_t>(token.data() - text.data()) + b;
    eligible.push_back({offset, e - b, synonyms});
  }

  const std::size_t k =
      std::min(RateBudget(rate, tokens.size()), eligible.size());
  Perturbation out;
  std::size_t cursor = 0;
  for (std::size_t pick : SampleWithoutReplacement(eligible.size(), k, stream)) {
    const Candidate& c = eligible[pick];
    const auto& synonyms = *c.synonyms;
    out.text.append(text.substr(cursor, c.offset - cursor));
    out.text += synonyms[static_cast<std::size_t>(stream.Bounded(synonyms.size()))];
    cursor = c.offset + c.length;
    ++out.edits;
  }
  out.text.append(text.substr(cursor));
  return out;
}

Perturbation PerturbText(std::string_view text, const AttackConfig& config,
                         const AttackResources& resources,
                         RngStream& stream) {
  switch (config.kind) {
    case AttackKind::kIdentity:
      return Perturbation{std::string(text), 0};
    case AttackKind::kShuffle:
      return ShuffleWords(text, stream);
    case AttackKind::kKeyboard: {
      static const KeyboardMap kQwerty = KeyboardMap::Qwerty();
      const KeyboardMap& map =
          resources.keyboard != nullptr ? *resources.keyboard : kQwerty;
      return KeyboardPerturb(text, config.rate, config.keyboard_mode, map,
                             stream);
    }
    case AttackKind::kSynonym:
      if (resources.thesaurus == nullptr || resources.pos == nullptr) {
        throw ConfigError("synonym attack needs a thesaurus and a pos lexicon");
      }
      return SynonymPerturb(text, config.rate, *resources.thesaurus,
                            *resources.pos, stream);
  }
  return Perturbation{std::string(text), 0};
}

std::vector<PerturbedSample> PerturbCorpus(const Corpus& corpus,
                                           const AttackConfig& config,
                                           const AttackResources& resources) {
  if (config.kind == AttackKind::kSynonym &&
      (resources.thesaurus == nullptr || resources.pos == nullptr)) {
    throw ConfigError("synonym attack needs a thesaurus and a pos lexicon");
  }
  if (config.kind == AttackKind::kKeyboard ||
      config.kind == AttackKind::kSynonym) {
    CheckRate(config.rate);
  }
  std::vector<PerturbedSample> out;
  out.reserve(corpus.size());
  for (const Sample& sample : corpus.samples) {
    RngStream stream = DeriveStream(config.seed, sample.id);
    Perturbation p = PerturbText(sample.text, config, resources, stream);
    out.push_back(PerturbedSample{sample.id, sample.label, sample.text,
                                  std::move(p.text), p.edits});
  }
  return out;
}

}  // namespace sentest
