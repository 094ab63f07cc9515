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

#include "sentest/pipeline.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "sentest/embedding_cache.h"
#include "sentest/http_embedder.h"
#include "sentest/lexicon.h"
#include "sentest/metrics.h"
#include "sentest/mock_embedders.h"
#include "sentest/probe.h"

namespace sentest {
namespace {

using nlohmann::json;

void RejectUnknownKeys(const json& obj, std::initializer_list<const char*> keys,
                       const std::string& where) {
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) throw ConfigError(where + ": unknown key \"" + k + "\"");
  }
}

const json& RequireObject(const json& parent, const char* key,
                          const std::string& where) {
  auto it = parent.find(key);
  if (it == parent.end() || !it->is_object()) {
    throw ConfigError(where + ": \"" + key + "\" must be an object");
  }
  return *it;
}

template <typename T>
T Get(const json& obj, const char* key, const std::string& where, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": \"" + key + "\" has the wrong type");
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) return base / path;
  return path;
}

AttackConfig ParseAttack(const json& j, std::uint64_t run_seed,
                         std::size_t index) {
  const std::string where = "attacks[" + std::to_string(index) + "]";
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  RejectUnknownKeys(j, {"kind", "rate", "keyboard_mode", "seed"}, where);
  const std::string kind = Get<std::string>(j, "kind", where, "");
  if (kind.empty()) throw ConfigError(where + ": missing \"kind\"");
  AttackConfig a = AttackConfig::For(ParseAttackKind(kind), run_seed);
  a.rate = Get<double>(j, "rate", where, a.rate);
  if (!(a.rate >= 0.0 && a.rate <= 1.0)) {
    throw ConfigError(where + ": rate must lie in [0, 1]");
  }
  a.keyboard_mode = ParseKeyboardMode(
      Get<std::string>(j, "keyboard_mode", where, "char_fraction"));
  a.seed = Get<std::uint64_t>(j, "seed", where, run_seed);
  return a;
}

// Runs `fn`, relabeling any failure with the stage name.
template <typename Fn>
auto Stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const PipelineError&) {
    throw;
  } catch (const Error& e) {
    throw PipelineError(name, e.kind(), e.what());
  } catch (const std::exception& e) {
    throw PipelineError(name, ErrorKind::kIo, e.what());
  }
}

std::vector<std::string> Texts(const Corpus& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.size());
  for (const Sample& s : corpus.samples) out.push_back(s.text);
  return out;
}

std::vector<std::string> Labels(const Corpus& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.size());
  for (const Sample& s : corpus.samples) out.push_back(s.label);
  return out;
}

}  // namespace

EmbedderKind ParseEmbedderKind(std::string_view name) {
  if (name == "mock-bow") return EmbedderKind::kMockBow;
  if (name == "mock-bigram") return EmbedderKind::kMockBigram;
  if (name == "http") return EmbedderKind::kHttp;
  throw ConfigError("unknown embedder: " + std::string(name));
}

const char* EmbedderKindName(EmbedderKind kind) {
  switch (kind) {
    case EmbedderKind::kMockBow: return "mock-bow";
    case EmbedderKind::kMockBigram: return "mock-bigram";
    case EmbedderKind::kHttp: return "http";
  }
  return "mock-bow";
}

RunConfig ParseRunConfig(const json& doc, const std::filesystem::path& base) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RejectUnknownKeys(doc,
                    {"dataset", "attacks", "embedder", "head", "knn", "seed",
                     "output", "resources", "probe", "formats"},
                    "config");
  RunConfig cfg;
  cfg.seed = Get<std::uint64_t>(doc, "seed", "config", 0);

  const json& ds = RequireObject(doc, "dataset", "config");
  RejectUnknownKeys(ds, {"train", "test", "format"}, "dataset");
  const std::string train = Get<std::string>(ds, "train", "dataset", "");
  const std::string test = Get<std::string>(ds, "test", "dataset", "");
  if (train.empty() || test.empty()) {
    throw ConfigError("dataset: both \"train\" and \"test\" are required");
  }
  cfg.dataset.train = Resolve(base, train);
  cfg.dataset.test = Resolve(base, test);
  cfg.dataset.format =
      ParseCorpusFormat(Get<std::string>(ds, "format", "dataset", "jsonl"));

  auto attacks = doc.find("attacks");
  if (attacks == doc.end() || !attacks->is_array() || attacks->empty()) {
    throw ConfigError("config: \"attacks\" must be a non-empty array");
  }
  for (std::size_t i = 0; i < attacks->size(); ++i) {
    cfg.attacks.push_back(ParseAttack((*attacks)[i], cfg.seed, i));
  }

  if (doc.contains("embedder")) {
    const json& e = RequireObject(doc, "embedder", "config");
    RejectUnknownKeys(e, {"kind", "endpoint", "model", "dim", "batch_size", "cache"},
                      "embedder");
    cfg.embedder.kind =
        ParseEmbedderKind(Get<std::string>(e, "kind", "embedder", "mock-bow"));
    cfg.embedder.endpoint = Get<std::string>(e, "endpoint", "embedder", "");
    cfg.embedder.model = Get<std::string>(e, "model", "embedder", "");
    cfg.embedder.dim = Get<std::size_t>(e, "dim", "embedder", 0);
    cfg.embedder.batch_size = Get<std::size_t>(e, "batch_size", "embedder", 32);
    if (cfg.embedder.batch_size == 0) {
      throw ConfigError("embedder: batch_size must be >= 1");
    }
    const std::string cache = Get<std::string>(e, "cache", "embedder", "");
    if (!cache.empty()) cfg.embedder.cache = Resolve(base, cache);
  }
  if (cfg.embedder.kind == EmbedderKind::kHttp) {
    if (cfg.embedder.endpoint.empty()) {
      if (const char* env = std::getenv(kEmbedUrlEnv); env && *env) {
        cfg.embedder.endpoint = env;
      }
    }
    if (cfg.embedder.endpoint.empty() || cfg.embedder.model.empty()) {
      throw ConfigError("embedder: http needs \"endpoint\" (or $" +
                        std::string(kEmbedUrlEnv) + ") and \"model\"");
    }
  }

  if (doc.contains("head")) {
    const json& h = RequireObject(doc, "head", "config");
    RejectUnknownKeys(h, {"learning_rate", "epochs", "l2"}, "head");
    cfg.head.learning_rate =
        Get<double>(h, "learning_rate", "head", cfg.head.learning_rate);
    cfg.head.epochs = Get<std::size_t>(h, "epochs", "head", cfg.head.epochs);
    cfg.head.l2 = Get<double>(h, "l2", "head", cfg.head.l2);
    if (!(cfg.head.learning_rate > 0.0) || !(cfg.head.l2 >= 0.0)) {
      throw ConfigError("head: learning_rate must be > 0 and l2 >= 0");
    }
  }
  if (doc.contains("knn")) {
    const json& k = RequireObject(doc, "knn", "config");
    RejectUnknownKeys(k, {"k", "metric"}, "knn");
    cfg.knn.k = Get<std::size_t>(k, "k", "knn", cfg.knn.k);
    if (cfg.knn.k == 0) throw ConfigError("knn: k must be >= 1");
    if (Get<std::string>(k, "metric", "knn", "cosine") != "cosine") {
      throw ConfigError("knn: only the cosine metric is supported");
    }
  }

  const std::string output = Get<std::string>(doc, "output", "config", "");
  if (output.empty()) throw ConfigError("config: \"output\" is required");
  cfg.output = Resolve(base, output);

  if (doc.contains("resources")) {
    const json& r = RequireObject(doc, "resources", "config");
    RejectUnknownKeys(r, {"keyboard", "thesaurus", "pos"}, "resources");
    for (auto [key, slot] :
         {std::pair{"keyboard", &cfg.resources.keyboard},
          std::pair{"thesaurus", &cfg.resources.thesaurus},
          std::pair{"pos", &cfg.resources.pos}}) {
      const std::string p = Get<std::string>(r, key, "resources", "");
      if (!p.empty()) *slot = Resolve(base, p);
    }
  }
  if (doc.contains("probe")) {
    const json& p = RequireObject(doc, "probe", "config");
    RejectUnknownKeys(p, {"enabled", "raw_negatives"}, "probe");
    cfg.probe.enabled = Get<bool>(p, "enabled", "probe", true);
    cfg.probe.raw_negatives = Get<bool>(p, "raw_negatives", "probe", false);
  }
  if (doc.contains("formats")) {
    const auto names =
        Get<std::vector<std::string>>(doc, "formats", "config", {});
    cfg.formats.clear();
    for (const std::string& f : names) cfg.formats.insert(ParseReportFormat(f));
    if (cfg.formats.empty()) throw ConfigError("config: no report formats");
  }
  return cfg;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc = json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ConfigError("config " + path.string() + " is not valid JSON");
  }
  return ParseRunConfig(doc, path.parent_path());
}

json RunConfigToJson(const RunConfig& cfg) {
  json attacks = json::array();
  for (const AttackConfig& a : cfg.attacks) {
    attacks.push_back({{"kind", AttackKindName(a.kind)},
                       {"rate", a.rate},
                       {"keyboard_mode", KeyboardModeName(a.keyboard_mode)},
                       {"seed", a.seed}});
  }
  json embedder = {{"kind", EmbedderKindName(cfg.embedder.kind)},
                   {"dim", cfg.embedder.dim},
                   {"batch_size", cfg.embedder.batch_size}};
  if (cfg.embedder.kind == EmbedderKind::kHttp) {
    embedder["endpoint"] = cfg.embedder.endpoint;
    embedder["model"] = cfg.embedder.model;
  }
  if (cfg.embedder.cache) embedder["cache"] = cfg.embedder.cache->string();
  json resources = json::object();
  if (cfg.resources.keyboard) resources["keyboard"] = cfg.resources.keyboard->string();
  if (cfg.resources.thesaurus) resources["thesaurus"] = cfg.resources.thesaurus->string();
  if (cfg.resources.pos) resources["pos"] = cfg.resources.pos->string();
  json formats = json::array();
  for (ReportFormat f : cfg.formats) {
    formats.push_back(f == ReportFormat::kJson  ? "json"
                      : f == ReportFormat::kCsv ? "csv"
                                                : "md");
  }
  return json{
      {"dataset",
       {{"train", cfg.dataset.train.string()},
        {"test", cfg.dataset.test.string()},
        {"format", CorpusFormatName(cfg.dataset.format)}}},
      {"attacks", std::move(attacks)},
      {"embedder", std::move(embedder)},
      {"head",
       {{"learning_rate", cfg.head.learning_rate},
        {"epochs", cfg.head.epochs},
        {"l2", cfg.head.l2}}},
      {"knn", {{"k", cfg.knn.k}, {"metric", "cosine"}}},
      {"seed", cfg.seed},
      {"output", cfg.output.string()},
      {"resources", std::move(resources)},
      {"probe",
       {{"enabled", cfg.probe.enabled},
        {"raw_negatives", cfg.probe.raw_negatives}}},
      {"formats", std::move(formats)}};
}

std::unique_ptr<EmbeddingProvider> MakeProvider(const EmbedderConfig& config) {
  switch (config.kind) {
    case EmbedderKind::kMockBow:
      return std::make_unique<BowEmbedder>(config.dim ? config.dim
                                                      : kDefaultBowDim);
    case EmbedderKind::kMockBigram:
      return std::make_unique<BigramEmbedder>(config.dim ? config.dim
                                                         : kDefaultBigramDim);
    case EmbedderKind::kHttp: {
      HttpEmbedderOptions opts;
      opts.endpoint = config.endpoint;
      if (opts.endpoint.empty()) {
        if (const char* env = std::getenv(kEmbedUrlEnv)) opts.endpoint = env;
      }
      opts.model = config.model;
      opts.dim = config.dim;
      opts.batch_size = config.batch_size;
      return std::make_unique<HttpEmbedder>(std::move(opts));
    }
  }
  throw ConfigError("unknown embedder kind");
}

AttackResources LoadedResources::view() const {
  return AttackResources{keyboard ? &*keyboard : nullptr,
                         thesaurus ? &*thesaurus : nullptr,
                         pos ? &*pos : nullptr};
}

LoadedResources LoadAttackResources(const ResourceConfig& config,
                                    const std::vector<AttackConfig>& attacks) {
  bool need_keyboard = false;
  bool need_synonyms = false;
  for (const AttackConfig& a : attacks) {
    need_keyboard = need_keyboard || a.kind == AttackKind::kKeyboard;
    need_synonyms = need_synonyms || a.kind == AttackKind::kSynonym;
  }
  LoadedResources out;
  const std::filesystem::path data = DefaultDataDir();
  if (need_keyboard) {
    out.keyboard = config.keyboard ? KeyboardMap::Load(*config.keyboard)
                                   : KeyboardMap::Qwerty();
  }
  if (need_synonyms) {
    out.thesaurus =
        Thesaurus::Load(config.thesaurus.value_or(data / "thesaurus.json"));
    out.pos = PosLexicon::Load(config.pos.value_or(data / "pos_lexicon.json"));
  }
  return out;
}

std::string AttackLabel(const AttackConfig& attack) {
  switch (attack.kind) {
    case AttackKind::kIdentity:
    case AttackKind::kShuffle:
      return AttackKindName(attack.kind);
    case AttackKind::kKeyboard:
    case AttackKind::kSynonym: {
      std::string name = AttackKindName(attack.kind);
      if (attack.kind == AttackKind::kKeyboard &&
          attack.keyboard_mode == KeyboardMode::kWordFraction) {
        name += "-word";
      }
      return name + ":" + json(attack.rate).dump();
    }
  }
  return "identity";
}

RobustnessReport RunEvaluation(const RunConfig& config,
                               EmbeddingProvider* provider) {
  RobustnessReport report;
  report.started_at = UtcTimestamp();
  report.tool_version = SENTEST_VERSION;
  report.config = RunConfigToJson(config);

  const Corpus train = Stage("load", [&] {
    return LoadCorpus(config.dataset.train, config.dataset.format);
  });
  const Corpus test = Stage("load", [&] {
    return LoadCorpus(config.dataset.test, config.dataset.format);
  });
  report.train_stats = Stage("stats", [&] { return ComputeCorpusStats(train); });
  report.test_stats = Stage("stats", [&] { return ComputeCorpusStats(test); });

  const LoadedResources resources = Stage("resources", [&] {
    return LoadAttackResources(config.resources, config.attacks);
  });

  std::unique_ptr<EmbeddingProvider> owned;
  if (provider == nullptr) {
    owned = Stage("embed", [&] { return MakeProvider(config.embedder); });
    provider = owned.get();
  }
  std::unique_ptr<EmbeddingCache> cache;
  if (config.embedder.cache) {
    cache = Stage("embed", [&] {
      return std::make_unique<EmbeddingCache>(*config.embedder.cache);
    });
  }

  const std::vector<std::string> train_labels = Labels(train);
  const std::vector<std::string> gold = Labels(test);
  std::vector<std::string> all_labels = train.labels;
  all_labels.insert(all_labels.end(), test.labels.begin(), test.labels.end());
  std::sort(all_labels.begin(), all_labels.end());
  all_labels.erase(std::unique(all_labels.begin(), all_labels.end()),
                   all_labels.end());

  const auto train_embs = Stage("embed", [&] {
    return EmbedBatch(*provider, Texts(train), cache.get());
  });
  const auto clean_embs = Stage("embed", [&] {
    return EmbedBatch(*provider, Texts(test), cache.get());
  });

  const LinearHead head = Stage("train", [&] {
    return TrainLinearHead(train_embs, train_labels, config.head);
  });
  const auto pred_clean = Stage("predict", [&] { return Predict(head, clean_embs); });
  report.clean_accuracy = Accuracy(pred_clean, gold);
  report.clean_macro_f1 = MacroF1(pred_clean, gold, all_labels);

  for (const AttackConfig& attack : config.attacks) {
    const auto perturbed = Stage("perturb", [&] {
      return PerturbCorpus(test, attack, resources.view());
    });
    std::vector<std::string> texts;
    texts.reserve(perturbed.size());
    for (const PerturbedSample& p : perturbed) texts.push_back(p.perturbed_text);
    const auto pert_embs = Stage("embed", [&] {
      return EmbedBatch(*provider, texts, cache.get());
    });
    const auto pred_pert = Stage("predict", [&] { return Predict(head, pert_embs); });
    report.rows.push_back(RobustnessRow{
        AttackLabel(attack), Accuracy(pred_pert, gold),
        MacroF1(pred_pert, gold, all_labels), LabelOverlap(pred_clean, pred_pert),
        AvgPairedCosine(clean_embs, pert_embs)});
  }

  if (config.probe.enabled) {
    report.probe = Stage("probe", [&] {
      ProbeOptions opts;
      opts.raw_negatives = config.probe.raw_negatives;
      const ProbeDataset ds = BuildProbeDataset(train, config.seed, opts);
      return RunProbe(ds, *provider, config.head, config.knn, config.seed,
                      cache.get());
    });
  }
  report.finished_at = UtcTimestamp();
  return report;
}

}  // namespace sentest
