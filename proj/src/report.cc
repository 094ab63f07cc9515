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

#include "sentest/report.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "sentest/errors.h"

namespace sentest {
namespace {

using nlohmann::json;

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("write failed: " + path.string());
}

void EnsureDir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

CorpusStats StatsFromJson(const json& j) {
  CorpusStats s;
  s.num_samples = j.at("num_samples").get<std::size_t>();
  s.avg_words = j.at("avg_words").get<double>();
  s.vocab_size = j.at("vocab_size").get<std::size_t>();
  s.label_histogram =
      j.at("label_histogram").get<std::map<std::string, std::size_t>>();
  return s;
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md") return ReportFormat::kMarkdown;
  throw ConfigError("unknown report format: " + std::string(name));
}

json StatsToJson(const CorpusStats& stats) {
  return json{{"num_samples", stats.num_samples},
              {"avg_words", stats.avg_words},
              {"vocab_size", stats.vocab_size},
              {"label_histogram", stats.label_histogram}};
}

json ProbeToJson(const ProbeResult& probe) {
  return json{{"nn_accuracy", probe.nn_accuracy},
              {"knn_accuracy", probe.knn_accuracy},
              {"embedder", probe.embedder_name},
              {"seed", probe.seed},
              {"train_size", probe.train_size},
              {"test_size", probe.test_size}};
}

json ReportToJson(const RobustnessReport& report) {
  json rows = json::array();
  for (const RobustnessRow& r : report.rows) {
    rows.push_back({{"attack", r.attack},
                    {"accuracy", r.accuracy},
                    {"macro_f1", r.macro_f1},
                    {"overlap", r.overlap},
                    {"avg_cosine", r.avg_cosine}});
  }
  return json{
      {"status", "ok"},
      {"tool_version", report.tool_version},
      {"timestamps",
       {{"started", report.started_at}, {"finished", report.finished_at}}},
      {"config", report.config},
      {"stats",
       {{"train", StatsToJson(report.train_stats)},
        {"test", StatsToJson(report.test_stats)}}},
      {"clean",
       {{"accuracy", report.clean_accuracy},
        {"macro_f1", report.clean_macro_f1}}},
      {"rows", std::move(rows)},
      {"probe", report.probe ? ProbeToJson(*report.probe) : json(nullptr)}};
}

RobustnessReport ReportFromJson(const json& doc) {
  try {
    RobustnessReport r;
    r.tool_version = doc.at("tool_version").get<std::string>();
    r.started_at = doc.at("timestamps").at("started").get<std::string>();
    r.finished_at = doc.at("timestamps").at("finished").get<std::string>();
    r.config = doc.at("config");
    r.train_stats = StatsFromJson(doc.at("stats").at("train"));
    r.test_stats = StatsFromJson(doc.at("stats").at("test"));
    r.clean_accuracy = doc.at("clean").at("accuracy").get<double>();
    r.clean_macro_f1 = doc.at("clean").at("macro_f1").get<double>();
    for (const json& row : doc.at("rows")) {
      r.rows.push_back(RobustnessRow{row.at("attack").get<std::string>(),
                                     row.at("accuracy").get<double>(),
                                     row.at("macro_f1").get<double>(),
                                     row.at("overlap").get<double>(),
                                     row.at("avg_cosine").get<double>()});
    }
    const json& p = doc.at("probe");
    if (!p.is_null()) {
      r.probe = ProbeResult{p.at("nn_accuracy").get<double>(),
                            p.at("knn_accuracy").get<double>(),
                            p.at("embedder").get<std::string>(),
                            p.at("seed").get<std::uint64_t>(),
                            p.at("train_size").get<std::size_t>(),
                            p.at("test_size").get<std::size_t>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("report: ") + e.what());
  }
}

std::string RenderReportJson(const RobustnessReport& report) {
  return ReportToJson(report).dump(2) + "\n";
}

std::string RenderRowsCsv(const RobustnessReport& report) {
  std::string out = "attack,accuracy,macro_f1,overlap,avg_cosine\n";
  for (const RobustnessRow& r : report.rows) {
    out += r.attack + "," + json(r.accuracy).dump() + "," +
           json(r.macro_f1).dump() + "," + json(r.overlap).dump() + "," +
           json(r.avg_cosine).dump() + "\n";
  }
  return out;
}

std::string RenderReportMarkdown(const RobustnessReport& report) {
  std::string out = "# Robustness report\n\n";
  out += "| Test set | Accuracy | Macro-F1 | Label overlap vs clean | "
         "Avg cosine vs clean |\n";
  out += "|---|---|---|---|---|\n";
  out += "| clean | " + Fixed(report.clean_accuracy) + " | " +
         Fixed(report.clean_macro_f1) + " | - | - |\n";
  for (const RobustnessRow& r : report.rows) {
    out += "| " + r.attack + " | " + Fixed(r.accuracy) + " | " +
           Fixed(r.macro_f1) + " | " + Fixed(r.overlap) + " | " +
           Fixed(r.avg_cosine) + " |\n";
  }
  out += "\nTrain: " + std::to_string(report.train_stats.num_samples) +
         " samples, avg " + Fixed(report.train_stats.avg_words, 2) +
         " words, vocab " + std::to_string(report.train_stats.vocab_size) +
         ". Test: " + std::to_string(report.test_stats.num_samples) +
         " samples, avg " + Fixed(report.test_stats.avg_words, 2) +
         " words, vocab " + std::to_string(report.test_stats.vocab_size) +
         ".\n";
  if (report.probe) {
    out += "\n## Shuffle probe (" + report.probe->embedder_name + ")\n\n";
    out += "| Classifier | Accuracy |\n|---|---|\n";
    out += "| single-layer softmax | " + Fixed(report.probe->nn_accuracy) +
           " |\n";
    out += "| KNN | " + Fixed(report.probe->knn_accuracy) + " |\n";
  }
  return out;
}

std::vector<std::filesystem::path> EmitReport(
    const RobustnessReport& report, const std::filesystem::path& dir,
    const std::set<ReportFormat>& formats) {
  EnsureDir(dir);
  std::vector<std::filesystem::path> written;
  if (formats.count(ReportFormat::kJson)) {
    written.push_back(dir / "report.json");
    WriteText(written.back(), RenderReportJson(report));
  }
  if (formats.count(ReportFormat::kCsv)) {
    written.push_back(dir / "rows.csv");
    WriteText(written.back(), RenderRowsCsv(report));
  }
  if (formats.count(ReportFormat::kMarkdown)) {
    written.push_back(dir / "report.md");
    WriteText(written.back(), RenderReportMarkdown(report));
  }
  return written;
}

void EmitFailureStub(const std::filesystem::path& dir, std::string_view stage,
                     std::string_view kind, std::string_view message) {
  EnsureDir(dir);
  json stub = {{"status", "failed"},
               {"stage", stage},
               {"error_kind", kind},
               {"error", message},
               {"tool_version", SENTEST_VERSION},
               {"timestamps", {{"finished", UtcTimestamp()}}}};
  WriteText(dir / "report.json", stub.dump(2) + "\n");
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace sentest
