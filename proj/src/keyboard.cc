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

#include "sentest/keyboard.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sentest/errors.h"

namespace sentest {
namespace {

using nlohmann::json;

std::size_t Index(char c) { return static_cast<unsigned char>(c); }

bool IsLowerKey(const std::string& s) {
  return s.size() == 1 && !(s[0] >= 'A' && s[0] <= 'Z') &&
         static_cast<unsigned char>(s[0]) > 0x20 &&
         static_cast<unsigned char>(s[0]) < 0x7F;
}

}  // namespace

KeyboardMap KeyboardMap::Qwerty() {
  static constexpr std::array<std::string_view, 3> kRows = {
      "qwertyuiop", "asdfghjkl", "zxcvbnm"};
  KeyboardMap map;
  for (int r = 0; r < 3; ++r) {
    const int width = static_cast<int>(kRows[r].size());
    for (int c = 0; c < width; ++c) {
      std::vector<char>& out = map.adjacency_[Index(kRows[r][c])];
      if (c > 0) out.push_back(kRows[r][c - 1]);
      if (c + 1 < width) out.push_back(kRows[r][c + 1]);
      for (int dr : {-1, 1}) {
        const int rr = r + dr;
        if (rr < 0 || rr > 2) continue;
        const int other = static_cast<int>(kRows[rr].size());
        for (int cc = c - 1; cc <= c + 1; ++cc) {
          if (cc >= 0 && cc < other) out.push_back(kRows[rr][cc]);
        }
      }
    }
  }
  return map;
}

KeyboardMap KeyboardMap::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("keyboard map: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("keyboard map must be an object");
  KeyboardMap map;
  for (const auto& [key, neighbors] : doc.items()) {
    if (!IsLowerKey(key)) {
      throw ConfigError("keyboard map: bad key \"" + key + "\"");
    }
    if (!neighbors.is_array() || neighbors.empty()) {
      throw ConfigError("keyboard map: \"" + key +
                        "\" needs a non-empty neighbor array");
    }
    std::vector<char>& out = map.adjacency_[Index(key[0])];
    for (const auto& n : neighbors) {
      if (!n.is_string() || !IsLowerKey(n.get<std::string>())) {
        throw ConfigError("keyboard map: bad neighbor of \"" + key + "\"");
      }
      const char nc = n.get<std::string>()[0];
      if (nc == key[0]) {
        throw ConfigError("keyboard map: \"" + key + "\" lists itself");
      }
      if (std::find(out.begin(), out.end(), nc) != out.end()) {
        throw ConfigError("keyboard map: duplicate neighbor of \"" + key +
                          "\"");
      }
      out.push_back(nc);
    }
  }
  if (!map.IsSymmetric()) throw ConfigError("keyboard map is not symmetric");
  return map;
}

KeyboardMap KeyboardMap::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

std::string KeyboardMap::ToJson() const {
  json doc = json::object();
  for (char key : Keys()) {
    json arr = json::array();
    for (char n : Neighbors(key)) arr.push_back(std::string(1, n));
    doc[std::string(1, key)] = std::move(arr);
  }
  return doc.dump(2) + "\n";
}

bool KeyboardMap::HasKey(char c) const { return !adjacency_[Index(c)].empty(); }

const std::vector<char>& KeyboardMap::Neighbors(char c) const {
  return adjacency_[Index(c)];
}

bool KeyboardMap::IsSymmetric() const {
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    for (char b : adjacency_[a]) {
      const auto& back = adjacency_[Index(b)];
      if (std::find(back.begin(), back.end(), static_cast<char>(a)) ==
          back.end()) {
        return false;
      }
    }
  }
  return true;
}

std::vector<char> KeyboardMap::Keys() const {
  std::vector<char> keys;
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    if (!adjacency_[a].empty()) keys.push_back(static_cast<char>(a));
  }
  return keys;
}

}  // namespace sentest
