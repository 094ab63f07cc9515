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

#ifndef SENTEST_LEXICON_H_
#define SENTEST_LEXICON_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sentest {

// Lowercase word -> ordered single-token synonyms. A synonym never
// contains whitespace, so substitution preserves token count.
class Thesaurus {
 public:
  Thesaurus() = default;
  explicit Thesaurus(std::map<std::string, std::vector<std::string>> entries);

  static Thesaurus FromJson(std::string_view json_text);
  static Thesaurus Load(const std::filesystem::path& path);

  // nullptr when the word has no entry.
  const std::vector<std::string>* Find(const std::string& word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<std::string>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

enum PosTag : std::uint8_t {
  kPosAdj = 1 << 0,
  kPosAdv = 1 << 1,
  kPosNoun = 1 << 2,
  kPosVerb = 1 << 3,
  kPosOther = 1 << 4,
};

// Lowercase word -> set of coarse part-of-speech tags.
class PosLexicon {
 public:
  PosLexicon() = default;
  explicit PosLexicon(std::map<std::string, std::uint8_t> entries);

  static PosLexicon FromJson(std::string_view json_text);
  static PosLexicon Load(const std::filesystem::path& path);

  // Bitmask of PosTag; 0 for unknown words.
  std::uint8_t Tags(const std::string& word) const;
  bool IsAdjOrAdv(const std::string& word) const {
    return (Tags(word) & (kPosAdj | kPosAdv)) != 0;
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::uint8_t> entries_;
};

// Default resource locations under the shipped data directory. The
// SENTEST_DATA_DIR environment variable overrides the compiled-in path.
std::filesystem::path DefaultDataDir();

}  // namespace sentest

#endif  // SENTEST_LEXICON_H_
