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

#ifndef SENTEST_CORPUS_H_
#define SENTEST_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sentest {

enum class CorpusFormat { kJsonl, kCsv };

// Accepts "jsonl" or "csv"; throws ConfigError otherwise.
CorpusFormat ParseCorpusFormat(std::string_view name);
const char* CorpusFormatName(CorpusFormat format);

struct Sample {
  std::size_t id = 0;  // record position in the source file
  std::string text;
  std::string label;
};

struct Corpus {
  std::string name;
  std::vector<Sample> samples;
  std::vector<std::string> labels;  // distinct, sorted

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

// Builds a corpus from (text, label) pairs, assigning ids 0..N-1 and
// deriving the label set. Throws ValidationError on blank text.
Corpus MakeCorpus(std::string name,
                  std::vector<std::pair<std::string, std::string>> records);

// JSONL: one {"text": ..., "label": ...} object per line; blank lines are
// skipped. CSV: header row naming `text` and `label` columns, RFC 4180
// quoting. Errors: ParseError (with 1-based line), ValidationError (blank
// text, naming the sample id), EncodingError (bad UTF-8), IoError.
Corpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format);
Corpus ParseCorpus(std::string_view content, CorpusFormat format,
                   std::string name = "corpus");

std::string SerializeCorpus(const Corpus& corpus, CorpusFormat format);
void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path,
                CorpusFormat format);

struct CorpusStats {
  std::size_t num_samples = 0;
  double avg_words = 0.0;
  std::size_t vocab_size = 0;
  std::map<std::string, std::size_t> label_histogram;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Words are whitespace tokens of CleanText(text). Throws
// InvalidArgumentError on an empty corpus.
CorpusStats ComputeCorpusStats(const Corpus& corpus);

}  // namespace sentest

#endif  // SENTEST_CORPUS_H_
