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

// sentest: perturb labeled corpora, embed them, and measure how much the
// embeddings and downstream predictions move.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sentest/corpus.h"
#include "sentest/embedding_cache.h"
#include "sentest/errors.h"
#include "sentest/http_embedder.h"
#include "sentest/keyboard.h"
#include "sentest/lexicon.h"
#include "sentest/perturb.h"
#include "sentest/pipeline.h"
#include "sentest/probe.h"
#include "sentest/report.h"

namespace {

using nlohmann::json;
using namespace sentest;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitProvider = 4;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kConfig:
      return kExitConfig;
    case ErrorKind::kParse:
    case ErrorKind::kValidation:
    case ErrorKind::kEncoding:
    case ErrorKind::kIo:
      return kExitData;
    case ErrorKind::kProvider:
    case ErrorKind::kProtocol:
    case ErrorKind::kRequest:
      return kExitProvider;
  }
  return kExitData;
}

int RunStats(const std::string& input, const std::string& format) {
  const Corpus corpus = LoadCorpus(input, ParseCorpusFormat(format));
  json out = StatsToJson(ComputeCorpusStats(corpus));
  out["name"] = corpus.name;
  out["labels"] = corpus.labels;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct PerturbArgs {
  std::string input;
  std::string format = "jsonl";
  std::string attack;
  std::optional<double> rate;
  std::string mode = "char_fraction";
  std::uint64_t seed = 0;
  std::string output;
  std::string keyboard_map;
  std::string thesaurus;
  std::string pos;
};

int RunPerturb(const PerturbArgs& args) {
  const Corpus corpus = LoadCorpus(args.input, ParseCorpusFormat(args.format));
  AttackConfig attack = AttackConfig::For(ParseAttackKind(args.attack), args.seed);
  if (args.rate) attack.rate = *args.rate;
  attack.keyboard_mode = ParseKeyboardMode(args.mode);

  ResourceConfig rc;
  if (!args.keyboard_map.empty()) rc.keyboard = args.keyboard_map;
  if (!args.thesaurus.empty()) rc.thesaurus = args.thesaurus;
  if (!args.pos.empty()) rc.pos = args.pos;
  const LoadedResources resources = LoadAttackResources(rc, {attack});
  const auto perturbed = PerturbCorpus(corpus, attack, resources.view());

  std::ofstream out(args.output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + args.output);
  for (const PerturbedSample& p : perturbed) {
    json line = {{"id", p.id},
                 {"text", p.perturbed_text},
                 {"label", p.label},
                 {"original_text", p.original_text},
                 {"edits", p.edits}};
    out << line.dump() << '\n';
  }
  out.close();
  if (!out) throw IoError("write failed: " + args.output);
  return kExitOk;
}

int RunEval(const std::string& config_path) {
  const RunConfig config = LoadRunConfig(config_path);
  try {
    const RobustnessReport report = RunEvaluation(config);
    for (const auto& path : EmitReport(report, config.output, config.formats)) {
      std::cerr << "wrote " << path.string() << "\n";
    }
    std::cout << RenderReportMarkdown(report);
  } catch (const PipelineError& e) {
    try {
      EmitFailureStub(config.output, e.stage(), ErrorKindName(e.kind()),
                      e.what());
    } catch (const Error&) {
      // The original failure is the one worth reporting.
    }
    throw;
  }
  return kExitOk;
}

struct ProbeArgs {
  std::string input;
  std::string format = "jsonl";
  std::string embedder = "mock-bigram";
  std::string endpoint;
  std::string model;
  std::size_t dim = 0;
  std::string cache;
  std::uint64_t seed = 0;
  bool raw_negatives = false;
  std::size_t k = 5;
  std::size_t epochs = 200;
  double learning_rate = 0.1;
};

int RunProbeCommand(const ProbeArgs& args) {
  const Corpus corpus = LoadCorpus(args.input, ParseCorpusFormat(args.format));
  EmbedderConfig ec;
  ec.kind = ParseEmbedderKind(args.embedder);
  ec.endpoint = args.endpoint;
  ec.model = args.model;
  ec.dim = args.dim;
  if (ec.kind == EmbedderKind::kHttp && ec.model.empty()) {
    throw ConfigError("--model is required with --embedder http");
  }
  auto provider = MakeProvider(ec);
  std::unique_ptr<EmbeddingCache> cache;
  if (!args.cache.empty()) cache = std::make_unique<EmbeddingCache>(args.cache);

  ProbeOptions opts;
  opts.raw_negatives = args.raw_negatives;
  TrainConfig tc;
  tc.epochs = args.epochs;
  tc.learning_rate = args.learning_rate;
  KnnConfig kc;
  kc.k = args.k;
  const ProbeDataset ds = BuildProbeDataset(corpus, args.seed, opts);
  const ProbeResult result =
      RunProbe(ds, *provider, tc, kc, args.seed, cache.get());
  std::cout << ProbeToJson(result).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robustness harness for sentence embeddings", "sentest"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SENTEST_VERSION);

  std::string stats_input, stats_format = "jsonl";
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--input", stats_input, "Corpus file")->required();
  stats->add_option("--format", stats_format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  PerturbArgs pa;
  auto* perturb = app.add_subcommand("perturb", "Write a perturbed copy of a corpus");
  perturb->add_option("--input", pa.input, "Corpus file")->required();
  perturb->add_option("--format", pa.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  perturb->add_option("--attack", pa.attack, "shuffle, keyboard, synonym or identity")
      ->required()
      ->check(CLI::IsMember({"shuffle", "keyboard", "synonym", "identity"}));
  perturb->add_option("--rate", pa.rate,
                      "Fraction of units to edit (default 0.05 keyboard, 0.2 synonym)")
      ->check(CLI::Range(0.0, 1.0));
  perturb->add_option("--mode", pa.mode, "Keyboard mode")
      ->check(CLI::IsMember({"char_fraction", "word_fraction"}));
  perturb->add_option("--seed", pa.seed, "Global seed");
  perturb->add_option("--output", pa.output, "Output JSONL")->required();
  perturb->add_option("--keyboard-map", pa.keyboard_map, "Keyboard adjacency JSON");
  perturb->add_option("--thesaurus", pa.thesaurus, "Thesaurus JSON");
  perturb->add_option("--pos", pa.pos, "POS lexicon JSON");

  std::string config_path;
  auto* eval = app.add_subcommand("eval", "Run a full robustness evaluation");
  eval->add_option("--config", config_path, "Run configuration JSON")->required();

  ProbeArgs pr;
  auto* probe = app.add_subcommand("probe", "Shuffle-detection probe on raw embeddings");
  probe->add_option("--input", pr.input, "Corpus file")->required();
  probe->add_option("--format", pr.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  probe->add_option("--embedder", pr.embedder, "mock-bow, mock-bigram or http")
      ->check(CLI::IsMember({"mock-bow", "mock-bigram", "http"}));
  probe->add_option("--endpoint", pr.endpoint, "Embedding server URL")
      ->envname(kEmbedUrlEnv);
  probe->add_option("--model", pr.model, "Model name for the http embedder");
  probe->add_option("--dim", pr.dim, "Embedding dimension (0 = default)");
  probe->add_option("--cache", pr.cache, "Embedding cache file");
  probe->add_option("--seed", pr.seed, "Global seed");
  probe->add_flag("--raw-negatives", pr.raw_negatives,
                  "Do not clean the unshuffled texts");
  probe->add_option("--k", pr.k, "KNN neighbors")->check(CLI::PositiveNumber);
  probe->add_option("--epochs", pr.epochs, "Head training epochs");
  probe->add_option("--learning-rate", pr.learning_rate, "Head learning rate")
      ->check(CLI::PositiveNumber);

  std::string keyboard_out;
  auto* keyboard = app.add_subcommand("keyboard-map", "Write the built-in QWERTY map");
  keyboard->add_option("--output", keyboard_out, "Output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*stats) return RunStats(stats_input, stats_format);
    if (*perturb) return RunPerturb(pa);
    if (*eval) return RunEval(config_path);
    if (*probe) return RunProbeCommand(pr);
    if (*keyboard) {
      std::ofstream out(keyboard_out, std::ios::binary | std::ios::trunc);
      out << KeyboardMap::Qwerty().ToJson();
      if (!out) throw IoError("cannot write " + keyboard_out);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "sentest: " << ErrorKindName(e.kind()) << " error: " << e.what()
              << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "sentest: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}
