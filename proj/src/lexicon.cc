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

#include "sentest/lexicon.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sentest/errors.h"
#include "sentest/text.h"

namespace sentest {
namespace {

using nlohmann::json;

std::string ReadResource(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ParseObject(std::string_view text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError(std::string(what) + " must be a JSON object");
  }
  return doc;
}

bool IsLowercaseToken(const std::string& s) {
  return !s.empty() && SplitWhitespaceViews(s).size() == 1 &&
         TrimAsciiSpace(s).size() == s.size() && Utf8Lower(s) == s;
}

std::uint8_t ParseTag(const std::string& tag) {
  if (tag == "ADJ") return kPosAdj;
  if (tag == "ADV") return kPosAdv;
  if (tag == "NOUN") return kPosNoun;
  if (tag == "VERB") return kPosVerb;
  if (tag == "OTHER") return kPosOther;
  throw ConfigError("pos lexicon: unknown tag \"" + tag + "\"");
}

}  // namespace

Thesaurus::Thesaurus(std::map<std::string, std::vector<std::string>> entries)
    : entries_(std::move(entries)) {
  for (const auto& [word, synonyms] : entries_) {
    if (!IsLowercaseToken(word)) {
      throw ConfigError("thesaurus: key \"" + word +
                        "\" must be a lowercase single token");
    }
    if (synonyms.empty()) {
      throw ConfigError("thesaurus: \"" + word + "\" has no synonyms");
    }
    for (const std::string& syn : synonyms) {
      if (syn == word) {
        throw ConfigError("thesaurus: \"" + word + "\" lists itself");
      }
      if (!IsLowercaseToken(syn)) {
        throw ConfigError("thesaurus: synonym \"" + syn + "\" of \"" + word +
                          "\" must be a lowercase single token");
      }
    }
  }
}

Thesaurus Thesaurus::FromJson(std::string_view json_text) {
  const json doc = ParseObject(json_text, "thesaurus");
  std::map<std::string, std::vector<std::string>> entries;
  for (const auto& [word, synonyms] : doc.items()) {
    if (!synonyms.is_array()) {
      throw ConfigError("thesaurus: \"" + word + "\" must map to an array");
    }
    auto& out = entries[word];
    for (const auto& s : synonyms) {
      if (!s.is_string()) {
        throw ConfigError("thesaurus: non-string synonym for \"" + word +
                          "\"");
      }
      out.push_back(s.get<std::string>());
    }
  }
  return Thesaurus(std::move(entries));
}

Thesaurus Thesaurus::Load(const std::filesystem::path& path) {
  return FromJson(ReadResource(path));
}

const std::vector<std::string>* Thesaurus::Find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

PosLexicon::PosLexicon(std::map<std::string, std::uint8_t> entries)
    : entries_(std::move(entries)) {
  for (const auto& [word, tags] : entries_) {
    if (tags == 0) throw ConfigError("pos lexicon: \"" + word + "\" has no tags");
  }
}

PosLexicon PosLexicon::FromJson(std::string_view json_text) {
  const json doc = ParseObject(json_text, "pos lexicon");
  std::map<std::string, std::uint8_t> entries;
  for (const auto& [word, tags] : doc.items()) {
    if (!tags.is_array()) {
      throw ConfigError("pos lexicon: \"" + word + "\" must map to an array");
    }
    std::uint8_t mask = 0;
    for (const auto& t : tags) {
      if (!t.is_string()) {
        throw ConfigError("pos lexicon: non-string tag for \"" + word + "\"");
      }
      mask |= ParseTag(t.get<std::string>());
    }
    entries[word] = mask;
  }
  return PosLexicon(std::move(entries));
}

PosLexicon PosLexicon::Load(const std::filesystem::path& path) {
  return FromJson(ReadResource(path));
}

std::uint8_t PosLexicon::Tags(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? 0 : it->second;
}

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv("SENTEST_DATA_DIR"); env && *env) {
    return env;
  }
  return SENTEST_DATA_DIR;
}

}  // namespace sentest
