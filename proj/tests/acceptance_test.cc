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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Usage: acceptance_test <path to sentest binary>.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sentest/corpus.h"
#include "sentest/determinism.h"
#include "sentest/embedding_cache.h"
#include "sentest/errors.h"
#include "sentest/heads.h"
#include "sentest/http_embedder.h"
#include "sentest/keyboard.h"
#include "sentest/lexicon.h"
#include "sentest/metrics.h"
#include "sentest/mock_embedders.h"
#include "sentest/perturb.h"
#include "sentest/pipeline.h"
#include "sentest/probe.h"
#include "sentest/text.h"
#include "testing/fixture_server.h"
#include "testing/synthetic.h"

namespace sentest {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

// A criterion returns a one-line detail and sets `ok`.
struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  explicit Check(Outcome* o) : o_(o) {}
  void operator()(bool cond, const std::string& what) {
    if (!cond && o_->ok) {
      o_->ok = false;
      o_->detail = what;
    }
  }

 private:
  Outcome* o_;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path WorkDir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "sentest_acceptance" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

Outcome PerturbCliDeterminism(const std::string& bin) {
  Outcome o;
  Check check(&o);
  const fs::path dir = WorkDir("determinism");
  SaveCorpus(testing::GrammarCorpus(1000, 3), dir / "fixture.jsonl",
             CorpusFormat::kJsonl);
  double worst = 0.0;
  for (const char* attack : {"shuffle", "keyboard", "synonym"}) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (std::string(attack) + std::to_string(run) + ".jsonl");
      const std::string cmd = bin + " perturb --input " + (dir / "fixture.jsonl").string() +
                              " --attack " + attack + " --seed 1234 --output " +
                              out.string();
      const auto start = Clock::now();
      const int status = std::system(cmd.c_str());
      worst = std::max(worst, Seconds(start));
      check(WIFEXITED(status) && WEXITSTATUS(status) == 0,
            std::string(attack) + " run failed");
      outputs[run] = ReadFile(out);
    }
    check(!outputs[0].empty() && outputs[0] == outputs[1],
          std::string(attack) + " outputs differ");
  }
  check(worst < 5.0, "slowest run took " + Fmt(worst) + " s");
  if (o.ok) o.detail = "3 attacks x 2 runs byte-identical, slowest " + Fmt(worst) + " s";
  return o;
}

Outcome ShuffleMultiset() {
  Outcome o;
  Check check(&o);
  const auto strings = testing::RandomStrings(1000, 101);
  std::size_t moved = 0;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    RngStream rng = DeriveStream(55, i);
    const Perturbation p = ShuffleWords(strings[i], rng);
    auto before = SplitWhitespace(CleanText(strings[i]));
    auto after = SplitWhitespace(p.text);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    check(before == after, "multiset differs for string " + std::to_string(i));
    moved += p.edits > 0;
  }
  if (o.ok) o.detail = "1000/1000 exact, " + std::to_string(moved) + " reordered";
  return o;
}

Outcome KeyboardBudget() {
  Outcome o;
  Check check(&o);
  const KeyboardMap shipped = KeyboardMap::Load(DefaultDataDir() / "qwerty.json");
  check(shipped.IsSymmetric(), "shipped map is not symmetric");
  check(shipped == KeyboardMap::Qwerty(), "shipped map differs from built-in");
  const auto strings = testing::RandomStrings(1000, 202);
  std::size_t total = 0;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    RngStream rng = DeriveStream(66, i);
    const std::string clean = CleanText(strings[i]);
    const Perturbation p =
        KeyboardPerturb(strings[i], 0.05, KeyboardMode::kCharFraction, shipped, rng);
    std::size_t letters = 0;
    for (char c : clean) letters += shipped.HasKey(c);
    std::size_t diffs = 0;
    bool neighbors_ok = p.text.size() == clean.size();
    for (std::size_t j = 0; neighbors_ok && j < clean.size(); ++j) {
      if (clean[j] == p.text[j]) continue;
      ++diffs;
      const auto& nb = shipped.Neighbors(clean[j]);
      neighbors_ok = std::find(nb.begin(), nb.end(), p.text[j]) != nb.end();
    }
    // Exact integer ceiling of 0.05 * letters.
    const std::size_t want = (5 * letters + 99) / 100;
    check(neighbors_ok, "non-neighbor substitution in string " + std::to_string(i));
    check(diffs == want, "string " + std::to_string(i) + ": " + std::to_string(diffs) +
                             " edits, expected " + std::to_string(want));
    total += diffs;
  }
  if (o.ok) o.detail = "1000/1000 exact, " + std::to_string(total) + " letters edited, map symmetric";
  return o;
}

Outcome SynonymDiscipline() {
  Outcome o;
  Check check(&o);
  const Thesaurus thesaurus = Thesaurus::Load(DefaultDataDir() / "thesaurus.json");
  const PosLexicon pos = PosLexicon::Load(DefaultDataDir() / "pos_lexicon.json");
  const auto sentences = testing::SynonymSentences(1000, 303);
  std::size_t total = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    RngStream rng = DeriveStream(77, i);
    const Perturbation p = SynonymPerturb(sentences[i], 0.2, thesaurus, pos, rng);
    const auto before = SplitWhitespace(sentences[i]);
    const auto after = SplitWhitespace(p.text);
    check(before.size() == after.size(), "token count changed in " + std::to_string(i));
    if (before.size() != after.size()) continue;
    std::size_t replaced = 0;
    for (std::size_t w = 0; w < before.size(); ++w) {
      if (before[w] == after[w]) continue;
      ++replaced;
      std::string_view tok = before[w];
      while (!tok.empty() && IsAsciiPunct(tok.front())) tok.remove_prefix(1);
      while (!tok.empty() && IsAsciiPunct(tok.back())) tok.remove_suffix(1);
      const std::string core = Utf8Lower(tok);
      const auto* syns = thesaurus.Find(core);
      check(syns != nullptr && pos.IsAdjOrAdv(core),
            "replaced non-ADJ/ADV word \"" + before[w] + "\"");
    }
    const std::size_t cap = (2 * before.size() + 9) / 10;
    check(replaced <= cap, "sentence " + std::to_string(i) + " over budget");
    total += replaced;
  }
  check(total > 0, "no replacements at all");
  if (o.ok) o.detail = "1000/1000 within budget, " + std::to_string(total) + " replacements";
  return o;
}

Outcome BowInvariance() {
  Outcome o;
  Check check(&o);
  const Corpus test = testing::GrammarCorpus(500, 404);
  const auto shuffled =
      PerturbCorpus(test, AttackConfig::For(AttackKind::kShuffle, 9), {});
  std::vector<std::string> clean_texts, shuffled_texts;
  for (std::size_t i = 0; i < test.size(); ++i) {
    clean_texts.push_back(test.samples[i].text);
    shuffled_texts.push_back(shuffled[i].perturbed_text);
  }
  BowEmbedder bow;
  const double cos = AvgPairedCosine(EmbedBatch(bow, clean_texts),
                                     EmbedBatch(bow, shuffled_texts));
  check(std::abs(cos - 1.0) <= 1e-6, "avg cosine " + Fmt(cos));

  const fs::path dir = WorkDir("identity");
  SaveCorpus(testing::GrammarCorpus(200, 405), dir / "train.jsonl", CorpusFormat::kJsonl);
  SaveCorpus(test, dir / "test.jsonl", CorpusFormat::kJsonl);
  const RunConfig cfg = ParseRunConfig(
      json{{"dataset", {{"train", "train.jsonl"}, {"test", "test.jsonl"}}},
           {"attacks", json::array({{{"kind", "identity"}}})},
           {"output", "out"}},
      dir);
  const RobustnessReport r = RunEvaluation(cfg);
  check(r.rows.size() == 1 && r.rows[0].overlap == 1.0 && r.rows[0].avg_cosine == 1.0,
        "identity row not exact");
  if (o.ok) o.detail = "avg cosine " + Fmt(cos) + ", identity overlap 1 and cosine 1 exactly";
  return o;
}

Outcome ProbeDirection() {
  Outcome o;
  Check check(&o);
  const auto start = Clock::now();
  const Corpus corpus = testing::GrammarCorpus(500, 7);
  for (const Sample& s : corpus.samples) {
    if (SplitWhitespace(CleanText(s.text)).size() < 8) {
      check(false, "sentence with fewer than 8 words");
      break;
    }
  }
  double bigram_min = 1.0, bow_min = 1.0, bow_max = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ProbeDataset ds = BuildProbeDataset(corpus, seed);
    BigramEmbedder bigram;
    BowEmbedder bow;
    const double b = RunProbe(ds, bigram, TrainConfig{}, KnnConfig{}, seed).nn_accuracy;
    const double w = RunProbe(ds, bow, TrainConfig{}, KnnConfig{}, seed).nn_accuracy;
    bigram_min = std::min(bigram_min, b);
    bow_min = std::min(bow_min, w);
    bow_max = std::max(bow_max, w);
  }
  const double secs = Seconds(start);
  check(bigram_min >= 0.80, "bigram min accuracy " + Fmt(bigram_min));
  check(bow_min >= 0.35 && bow_max <= 0.65,
        "bow accuracy range [" + Fmt(bow_min) + ", " + Fmt(bow_max) + "]");
  check(secs < 120.0, "took " + Fmt(secs) + " s");
  if (o.ok) {
    o.detail = "bigram min " + Fmt(bigram_min) + ", bow in [" + Fmt(bow_min) + ", " +
               Fmt(bow_max) + "], " + Fmt(secs) + " s";
  }
  return o;
}

double Uniform(RngStream& rng) { return static_cast<double>(rng.Next() >> 11) * 0x1.0p-53; }

Outcome HeadCorrectness() {
  Outcome o;
  Check check(&o);
  // Two separable 2-D clusters.
  RngStream rng{11};
  std::vector<EmbeddingVector> x;
  std::vector<std::string> y;
  for (int i = 0; i < 200; ++i) {
    const bool pos = i % 2 == 0;
    const double cx = pos ? 1.0 : -1.0;
    x.emplace_back(std::vector<float>{static_cast<float>(cx + 0.8 * (Uniform(rng) - 0.5)),
                                      static_cast<float>(0.8 * (Uniform(rng) - 0.5))});
    y.push_back(pos ? "pos" : "neg");
  }
  std::vector<double> trace;
  const LinearHead head = TrainLinearHead(x, y, TrainConfig{}, &trace);
  const double train_acc = Accuracy(Predict(head, x), y);
  check(train_acc == 1.0, "train accuracy " + Fmt(train_acc));
  for (std::size_t i = 1; i < trace.size(); ++i) {
    check(trace[i] <= trace[i - 1], "loss rose at epoch " + std::to_string(i));
  }

  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t classes = 2 + rng.Bounded(3);
    const std::size_t dim = 1 + rng.Bounded(5);
    const std::size_t n = 3 + rng.Bounded(10);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < classes; ++c) names.push_back("k" + std::to_string(c));
    LinearHead h = MakeZeroHead(names, dim);
    for (double& w : h.weights) w = 2 * Uniform(rng) - 1;
    for (double& b : h.bias) b = 2 * Uniform(rng) - 1;
    std::vector<EmbeddingVector> inputs;
    EncodedDataset data{{}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<float> v(dim);
      for (float& f : v) f = static_cast<float>(2 * Uniform(rng) - 1);
      inputs.emplace_back(std::move(v));
      data.targets.push_back(rng.Bounded(classes));
    }
    data.inputs = inputs;
    const double l2 = Uniform(rng) * 0.1;
    std::vector<double> gw, gb;
    SoftmaxObjective(h, data, l2, &gw, &gb);
    auto probe = [&](std::vector<double>& params, const std::vector<double>& grad) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        const double saved = params[i];
        const double eps = 1e-6;
        params[i] = saved + eps;
        const double up = SoftmaxObjective(h, data, l2, nullptr, nullptr);
        params[i] = saved - eps;
        const double down = SoftmaxObjective(h, data, l2, nullptr, nullptr);
        params[i] = saved;
        const double numeric = (up - down) / (2 * eps);
        worst = std::max(worst, std::abs(numeric - grad[i]) /
                                    std::max(1.0, std::abs(grad[i])));
      }
    };
    probe(h.weights, gw);
    probe(h.bias, gb);
  }
  check(worst <= 1e-4, "gradient relative error " + std::to_string(worst));
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    o.detail = "train accuracy 1.0, loss monotone over 200 epochs, max grad error " +
               std::string(buf);
  }
  return o;
}

Outcome MetricOracles() {
  Outcome o;
  Check check(&o);
  RngStream rng{12};
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.Bounded(100);
    // Cosine on a random pair; reference in long double.
    std::vector<float> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = static_cast<float>(2 * Uniform(rng) - 1);
      v[i] = static_cast<float>(2 * Uniform(rng) - 1);
    }
    long double dot = 0, nu = 0, nv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      dot += static_cast<long double>(u[i]) * v[i];
      nu += static_cast<long double>(u[i]) * u[i];
      nv += static_cast<long double>(v[i]) * v[i];
    }
    const double ref_cos = static_cast<double>(dot / std::sqrt(nu * nv));
    worst = std::max(worst, std::abs(Cosine(EmbeddingVector(u), EmbeddingVector(v)) - ref_cos));
    check(Cosine(EmbeddingVector(u), EmbeddingVector(u)) == 1.0, "self cosine not 1");

    const std::size_t classes = 2 + rng.Bounded(4);
    std::vector<std::string> labels, gold, pred, pert;
    for (std::size_t c = 0; c < classes; ++c) labels.push_back("c" + std::to_string(c));
    for (std::size_t i = 0; i < n; ++i) {
      gold.push_back(labels[rng.Bounded(classes)]);
      pred.push_back(labels[rng.Bounded(classes)]);
      pert.push_back(labels[rng.Bounded(classes)]);
    }
    std::size_t correct = 0, agree = 0;
    for (std::size_t i = 0; i < n; ++i) {
      correct += pred[i] == gold[i];
      agree += pred[i] == pert[i];
    }
    worst = std::max(worst, std::abs(Accuracy(pred, gold) - double(correct) / n));
    worst = std::max(worst, std::abs(LabelOverlap(pred, pert) - double(agree) / n));
    double f1 = 0;
    for (const auto& l : labels) {
      std::size_t tp = 0, fp = 0, fn = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tp += pred[i] == l && gold[i] == l;
        fp += pred[i] == l && gold[i] != l;
        fn += pred[i] != l && gold[i] == l;
      }
      const double p = tp + fp ? double(tp) / (tp + fp) : 0.0;
      const double r = tp + fn ? double(tp) / (tp + fn) : 0.0;
      f1 += p + r > 0 ? 2 * p * r / (p + r) : 0.0;
    }
    worst = std::max(worst, std::abs(MacroF1(pred, gold, labels) - f1 / classes));
  }
  check(worst <= 1e-12, "max deviation " + std::to_string(worst));
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1e", worst);
    o.detail = "300 randomized instances, max deviation " + std::string(buf);
  }
  return o;
}

Outcome ProtocolRobustness() {
  Outcome o;
  Check check(&o);
  using testing::FixtureServer;
  using testing::HttpFixture;
  using testing::Reply;
  const std::vector<std::string> two = {"one text", "two text"};
  auto options = [](const FixtureServer& s) {
    HttpEmbedderOptions opt;
    opt.endpoint = s.url();
    opt.model = "fixture-model";
    opt.backoff_base = std::chrono::milliseconds(1);
    opt.timeout = std::chrono::seconds(5);
    return opt;
  };
  auto always = [](const std::string& file, int status) {
    const std::string body = HttpFixture(file);
    return [=](const json&, std::size_t) { return Reply{status, body}; };
  };
  auto expect = [&](const char* file, int status, ErrorKind kind, const char* what) {
    FixtureServer server(always(file, status));
    HttpEmbedder e(options(server));
    try {
      e.Embed(two);
      check(false, std::string(what) + ": no error");
    } catch (const Error& err) {
      check(err.kind() == kind, std::string(what) + ": wrong error kind " +
                                    ErrorKindName(err.kind()));
    }
  };
  int cases = 0;
  {
    FixtureServer server(always("embed_2x4.json", 200));
    HttpEmbedder e(options(server));
    check(e.Embed(two).size() == 2 && e.dim() == 4, "200 fixture");
    ++cases;
  }
  expect("error_400.json", 400, ErrorKind::kRequest, "400"), ++cases;
  expect("error_500.json", 500, ErrorKind::kProvider, "500"), ++cases;
  {
    FixtureServer server([](const json& req, std::size_t) {
      if (req["texts"].size() > 1) return Reply{413, HttpFixture("error_413.json")};
      return testing::BowModelHandler(8)(req, 0);
    });
    HttpEmbedder e(options(server));
    check(e.Embed(two).size() == 2, "413 split");
    ++cases;
  }
  {
    FixtureServer server([](const json& req, std::size_t call) {
      if (call == 0) return Reply{500, HttpFixture("error_500.json")};
      return testing::BowModelHandler(8)(req, call);
    });
    HttpEmbedder e(options(server));
    check(e.Embed(two).size() == 2 && server.embed_calls() == 2, "500 then retry");
    ++cases;
  }
  for (const char* f : {"embed_wrong_dim.json", "embed_malformed.json",
                        "embed_count_mismatch.json", "embed_non_numeric.json",
                        "embed_missing_dim.json"}) {
    expect(f, 200, ErrorKind::kProtocol, f), ++cases;
  }

  FixtureServer server(testing::BowModelHandler(16));
  const fs::path dir = WorkDir("protocol");
  std::vector<std::string> texts;
  for (const Sample& s : testing::GrammarCorpus(50, 1).samples) texts.push_back(s.text);
  {
    EmbeddingCache cache(dir / "cache.jsonl");
    HttpEmbedder e(options(server));
    EmbedBatch(e, texts, &cache);
  }
  const std::size_t before = server.embed_calls();
  EmbeddingCache cache(dir / "cache.jsonl");
  HttpEmbedder e(options(server));
  EmbedBatch(e, texts, &cache);
  check(server.embed_calls() == before && e.calls() == 0, "cached run reached the server");
  if (o.ok) o.detail = std::to_string(cases) + " fixture cases, cached rerun made 0 calls";
  return o;
}

Outcome CorpusStatsFixtures() {
  Outcome o;
  Check check(&o);
  const CorpusStats a = ComputeCorpusStats(MakeCorpus("a", {{"ab cd", "x"}, {"ab", "y"}}));
  check(a.num_samples == 2 && a.avg_words == 1.5 && a.vocab_size == 2, "two-sample fixture");
  const CorpusStats b = ComputeCorpusStats(MakeCorpus("b", {{"x", "l"}}));
  check(b.num_samples == 1 && b.avg_words == 1.0 && b.vocab_size == 1, "one-sample fixture");
  const CorpusStats c = ComputeCorpusStats(ParseCorpus(
      "text,label\n\"The cat, the hat.\",a\nA cat!,b\n\"Hat; HAT; hat\",a\n",
      CorpusFormat::kCsv));
  // Words: the cat the hat | a cat | hat hat hat -> 9 words, vocab {the,cat,hat,a}.
  check(c.num_samples == 3 && c.avg_words == 3.0 && c.vocab_size == 4, "csv fixture");
  if (o.ok) o.detail = "3 hand-counted fixtures exact";
  return o;
}

}  // namespace
}  // namespace sentest

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <sentest binary>\n", argv[0]);
    return 2;
  }
  const std::string bin = argv[1];
  using sentest::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"perturb-cli-determinism", [&] { return sentest::PerturbCliDeterminism(bin); }},
      {"shuffle-multiset", sentest::ShuffleMultiset},
      {"keyboard-budget", sentest::KeyboardBudget},
      {"synonym-discipline", sentest::SynonymDiscipline},
      {"bow-shuffle-invariance", sentest::BowInvariance},
      {"probe-direction", sentest::ProbeDirection},
      {"head-correctness", sentest::HeadCorrectness},
      {"metric-oracles", sentest::MetricOracles},
      {"protocol-robustness", sentest::ProtocolRobustness},
      {"corpus-stats", sentest::CorpusStatsFixtures},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %-24s %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
