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

#ifndef SENTEST_REPORT_H_
#define SENTEST_REPORT_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sentest/corpus.h"
#include "sentest/metrics.h"
#include "sentest/probe.h"

namespace sentest {

struct RobustnessReport {
  nlohmann::json config;  // echo of the run configuration
  CorpusStats train_stats;
  CorpusStats test_stats;
  double clean_accuracy = 0.0;
  double clean_macro_f1 = 0.0;
  std::vector<RobustnessRow> rows;
  std::optional<ProbeResult> probe;
  std::string started_at;  // ISO 8601, UTC
  std::string finished_at;
  std::string tool_version;

  friend bool operator==(const RobustnessReport&,
                         const RobustnessReport&) = default;
};

enum class ReportFormat { kJson, kCsv, kMarkdown };

ReportFormat ParseReportFormat(std::string_view name);  // throws ConfigError

nlohmann::json ReportToJson(const RobustnessReport& report);
// Throws ParseError when a required field is absent or mistyped.
RobustnessReport ReportFromJson(const nlohmann::json& doc);

// Canonical report.json text: sorted keys, two-space indent.
std::string RenderReportJson(const RobustnessReport& report);
// attack,accuracy,macro_f1,overlap,avg_cosine with one line per attack.
std::string RenderRowsCsv(const RobustnessReport& report);
// Markdown table: a clean baseline line followed by one line per attack.
std::string RenderReportMarkdown(const RobustnessReport& report);

// Writes report.json / rows.csv / report.md into `dir` (created if
// needed) and returns the written paths. Throws IoError.
std::vector<std::filesystem::path> EmitReport(
    const RobustnessReport& report, const std::filesystem::path& dir,
    const std::set<ReportFormat>& formats = {ReportFormat::kJson,
                                             ReportFormat::kCsv,
                                             ReportFormat::kMarkdown});

// report.json for a run that aborted in `stage`.
void EmitFailureStub(const std::filesystem::path& dir, std::string_view stage,
                     std::string_view kind, std::string_view message);

nlohmann::json StatsToJson(const CorpusStats& stats);
nlohmann::json ProbeToJson(const ProbeResult& probe);

std::string UtcTimestamp();

}  // namespace sentest

#endif  // SENTEST_REPORT_H_
