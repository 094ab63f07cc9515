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

#ifndef SENTEST_KEYBOARD_H_
#define SENTEST_KEYBOARD_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sentest {

// Letter -> ordered neighbor letters. Keys and neighbors are single ASCII
// bytes, so replacing one letter with a neighbor never changes byte length.
class KeyboardMap {
 public:
  KeyboardMap() = default;

  // The built-in QWERTY layout: rows "qwertyuiop", "asdfghjkl", "zxcvbnm"
  // on raw column indices. Neighbors of (r, c) are (r, c-1), (r, c+1) and
  // (r±1, c-1..c+1), clipped to valid columns.
  static KeyboardMap Qwerty();

  // Parses {"q": ["w", "a", "s"], ...}. Validation: lowercase single-byte
  // keys and neighbors, no self-neighbors, no empty lists, symmetric.
  // Throws ConfigError on violation, ParseError on malformed JSON.
  static KeyboardMap FromJson(std::string_view json_text);
  static KeyboardMap Load(const std::filesystem::path& path);

  std::string ToJson() const;

  bool HasKey(char c) const;
  // Empty for characters that are not keys.
  const std::vector<char>& Neighbors(char c) const;

  bool IsSymmetric() const;
  std::vector<char> Keys() const;

  friend bool operator==(const KeyboardMap&, const KeyboardMap&) = default;

 private:
  std::array<std::vector<char>, 256> adjacency_{};
};

}  // namespace sentest

#endif  // SENTEST_KEYBOARD_H_
