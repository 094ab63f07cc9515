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

#ifndef SENTEST_PIPELINE_H_
#define SENTEST_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sentest/corpus.h"
#include "sentest/embedding.h"
#include "sentest/errors.h"
#include "sentest/heads.h"
#include "sentest/perturb.h"
#include "sentest/report.h"

namespace sentest {

struct DatasetConfig {
  std::filesystem::path train;
  std::filesystem::path test;
  CorpusFormat format = CorpusFormat::kJsonl;
};

enum class EmbedderKind { kMockBow, kMockBigram, kHttp };

EmbedderKind ParseEmbedderKind(std::string_view name);  // throws ConfigError
const char* EmbedderKindName(EmbedderKind kind);

struct EmbedderConfig {
  EmbedderKind kind = EmbedderKind::kMockBow;
  std::string endpoint;  // http only; falls back to $SENTEST_EMBED_URL
  std::string model;     // http only
  std::size_t dim = 0;   // 0 = embedder default (mock) or server-declared
  std::size_t batch_size = 32;
  std::optional<std::filesystem::path> cache;  // JSONL cache log
};

// Optional overrides of the shipped attack resources.
struct ResourceConfig {
  std::optional<std::filesystem::path> keyboard;
  std::optional<std::filesystem::path> thesaurus;
  std::optional<std::filesystem::path> pos;
};

struct ProbeRunConfig {
  bool enabled = false;
  bool raw_negatives = false;
};

struct RunConfig {
  DatasetConfig dataset;
  std::vector<AttackConfig> attacks;
  EmbedderConfig embedder;
  TrainConfig head;
  KnnConfig knn;
  std::uint64_t seed = 0;
  std::filesystem::path output;
  ResourceConfig resources;
  ProbeRunConfig probe;
  std::set<ReportFormat> formats = {ReportFormat::kJson, ReportFormat::kCsv,
                                    ReportFormat::kMarkdown};
};

// Parses the JSON run configuration. Relative paths resolve against
// `base_dir`. An attack without its own seed inherits the run seed; a rate
// attack without a rate gets its default. Throws ConfigError.
RunConfig ParseRunConfig(const nlohmann::json& doc,
                         const std::filesystem::path& base_dir = {});
RunConfig LoadRunConfig(const std::filesystem::path& path);
nlohmann::json RunConfigToJson(const RunConfig& config);

// Builds the configured provider. Throws ConfigError for an http embedder
// lacking an endpoint or model.
std::unique_ptr<EmbeddingProvider> MakeProvider(const EmbedderConfig& config);

// Loads whichever of the keyboard map, thesaurus and POS lexicon the attack
// list needs, from the overrides or the shipped data directory.
struct LoadedResources {
  std::optional<KeyboardMap> keyboard;
  std::optional<Thesaurus> thesaurus;
  std::optional<PosLexicon> pos;

  AttackResources view() const;
};
LoadedResources LoadAttackResources(const ResourceConfig& config,
                                    const std::vector<AttackConfig>& attacks);

// Row label, e.g. "shuffle", "keyboard:0.05", "keyboard-word:0.05".
std::string AttackLabel(const AttackConfig& attack);

// Error raised by RunEvaluation; names the stage that failed and keeps the
// kind of the underlying error.
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, ErrorKind kind, const std::string& message)
      : Error(kind, stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// The full clean-vs-perturbed experiment. A provider may be injected (for
// tests); otherwise one is built from config.embedder. Clean test
// embeddings are computed once and shared by all attacks.
RobustnessReport RunEvaluation(const RunConfig& config,
                               EmbeddingProvider* provider = nullptr);

}  // namespace sentest

#endif  // SENTEST_PIPELINE_H_
