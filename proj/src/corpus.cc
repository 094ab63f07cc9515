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

#include "sentest/corpus.h"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "sentest/errors.h"
#include "sentest/text.h"

namespace sentest {
namespace {

using nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::pair<std::string, std::string>> ParseJsonl(
    std::string_view content) {
  std::vector<std::pair<std::string, std::string>> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (TrimAsciiSpace(line).empty()) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": invalid JSON: " + e.what());
    }
    if (!obj.is_object()) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": expected a JSON object");
    }
    for (const char* field : {"text", "label"}) {
      auto it = obj.find(field);
      if (it == obj.end()) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": missing field \"" + field + "\"");
      }
      if (!it->is_string()) {
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": field \"" + field +
                                      "\" must be a string");
      }
    }
    records.emplace_back(obj["text"].get<std::string>(),
                         obj["label"].get<std::string>());
  }
  return records;
}

// RFC 4180 reader. Returns rows of fields along with the 1-based line on
// which each row starts.
std::vector<std::pair<std::size_t, std::vector<std::string>>> ReadCsvRows(
    std::string_view content) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::vector<std::string> row;
  std::string field;
  std::size_t line = 1;
  std::size_t row_line = 1;
  bool in_quotes = false;
  bool field_started = false;
  bool row_has_content = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content) rows.emplace_back(row_line, std::move(row));
    row.clear();
    row_has_content = false;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      if (field_started) {
        throw ParseError(line, "line " + std::to_string(line) +
                                   ": stray quote inside unquoted field");
      }
      in_quotes = true;
      field_started = true;
      row_has_content = true;
    } else if (c == ',') {
      end_field();
      row_has_content = true;
    } else if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') {
      // CRLF; the '\n' ends the row.
    } else if (c == '\n') {
      end_row();
      ++line;
      row_line = line;
    } else {
      if (!row_has_content) row_line = line;
      field.push_back(c);
      field_started = true;
      row_has_content = true;
    }
  }
  if (in_quotes) {
    throw ParseError(row_line, "line " + std::to_string(row_line) +
                                   ": unterminated quoted field");
  }
  end_row();
  return rows;
}

std::vector<std::pair<std::string, std::string>> ParseCsv(
    std::string_view content) {
  auto rows = ReadCsvRows(content);
  if (rows.empty()) throw ParseError(1, "line 1: missing CSV header");
  const auto& header = rows.front().second;
  std::size_t text_col = header.size();
  std::size_t label_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string_view name = TrimAsciiSpace(header[i]);
    if (i == 0 && name.starts_with("\xEF\xBB\xBF")) name.remove_prefix(3);
    if (name == "text") text_col = i;
    if (name == "label") label_col = i;
  }
  if (text_col == header.size() || label_col == header.size()) {
    throw ParseError(rows.front().first,
                     "line " + std::to_string(rows.front().first) +
                         ": CSV header must contain text and label columns");
  }
  std::vector<std::pair<std::string, std::string>> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [line, fields] = rows[r];
    if (fields.size() != header.size()) {
      throw ParseError(line, "line " + std::to_string(line) + ": expected " +
                                 std::to_string(header.size()) +
                                 " fields, got " +
                                 std::to_string(fields.size()));
    }
    records.emplace_back(fields[text_col], fields[label_col]);
  }
  return records;
}

std::string CsvQuote(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos ||
      (!field.empty() && (IsAsciiSpace(field.front()) ||
                          IsAsciiSpace(field.back())));
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

CorpusFormat ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "csv") return CorpusFormat::kCsv;
  throw ConfigError("unknown corpus format: " + std::string(name));
}

const char* CorpusFormatName(CorpusFormat format) {
  return format == CorpusFormat::kJsonl ? "jsonl" : "csv";
}

Corpus MakeCorpus(std::string name,
                  std::vector<std::pair<std::string, std::string>> records) {
  Corpus corpus;
  corpus.name = std::move(name);
  corpus.samples.reserve(records.size());
  std::set<std::string> labels;
  for (auto& [text, label] : records) {
    const std::size_t id = corpus.samples.size();
    if (TrimAsciiSpace(text).empty()) {
      throw ValidationError("sample " + std::to_string(id) +
                            ": text is empty");
    }
    labels.insert(label);
    corpus.samples.push_back(Sample{id, std::move(text), std::move(label)});
  }
  corpus.labels.assign(labels.begin(), labels.end());
  return corpus;
}

Corpus ParseCorpus(std::string_view content, CorpusFormat format,
                   std::string name) {
  if (!IsValidUtf8(content)) {
    std::size_t line = 1;
    // Report the first offending line for the user's benefit.
    std::size_t start = 0;
    while (start < content.size()) {
      std::size_t end = content.find('\n', start);
      if (end == std::string_view::npos) end = content.size();
      if (!IsValidUtf8(content.substr(start, end - start))) break;
      start = end + 1;
      ++line;
    }
    throw EncodingError(name + ": malformed UTF-8 at line " +
                        std::to_string(line));
  }
  auto records = format == CorpusFormat::kJsonl ? ParseJsonl(content)
                                                : ParseCsv(content);
  return MakeCorpus(std::move(name), std::move(records));
}

Corpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format) {
  return ParseCorpus(ReadFile(path), format, path.stem().string());
}

std::string SerializeCorpus(const Corpus& corpus, CorpusFormat format) {
  std::string out;
  if (format == CorpusFormat::kJsonl) {
    for (const Sample& s : corpus.samples) {
      json obj = {{"text", s.text}, {"label", s.label}};
      out += obj.dump();
      out.push_back('\n');
    }
    return out;
  }
  out = "text,label\n";
  for (const Sample& s : corpus.samples) {
    out += CsvQuote(s.text);
    out.push_back(',');
    out += CsvQuote(s.label);
    out.push_back('\n');
  }
  return out;
}

void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path,
                CorpusFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << SerializeCorpus(corpus, format);
  if (!out) throw IoError("write failed: " + path.string());
}

CorpusStats ComputeCorpusStats(const Corpus& corpus) {
  if (corpus.empty()) throw InvalidArgumentError("corpus is empty");
  CorpusStats stats;
  stats.num_samples = corpus.size();
  std::unordered_set<std::string> vocab;
  std::size_t total_words = 0;
  for (const Sample& s : corpus.samples) {
    const std::string cleaned = CleanText(s.text);
    for (std::string_view w : SplitWhitespaceViews(cleaned)) {
      vocab.emplace(w);
      ++total_words;
    }
    ++stats.label_histogram[s.label];
  }
  stats.avg_words =
      static_cast<double>(total_words) / static_cast<double>(stats.num_samples);
  stats.vocab_size = vocab.size();
  return stats;
}

}  // namespace sentest
