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

#ifndef SENTEST_TEXT_H_
#define SENTEST_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sentest {

// True for the 32 ASCII punctuation characters !"#$%&'()*+,-./:;<=>?@[\]^_`{|}~
bool IsAsciiPunct(char c);

// ASCII whitespace: space, \t, \n, \v, \f, \r.
bool IsAsciiSpace(char c);

// Normalization shared by the shuffle and keyboard attacks, the corpus
// statistics and the mock embedders: trim, drop ASCII punctuation,
// lowercase, and collapse whitespace runs to single spaces.
//
// Lowercasing is Unicode simple case mapping for ASCII, Latin-1,
// Latin Extended-A, Greek and Cyrillic; other code points pass through.
// Invalid UTF-8 sequences are copied through byte-for-byte.
std::string CleanText(std::string_view text);

// Splits on runs of ASCII whitespace; no empty tokens.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Same as SplitWhitespace but returns views into `text`.
std::vector<std::string_view> SplitWhitespaceViews(std::string_view text);

std::string JoinWords(const std::vector<std::string>& words);

// Simple lowercase of a UTF-8 string, using the mapping described above.
std::string Utf8Lower(std::string_view text);

bool IsValidUtf8(std::string_view text);

// Number of code points; assumes valid UTF-8.
std::size_t Utf8Length(std::string_view text);

std::string_view TrimAsciiSpace(std::string_view text);

}  // namespace sentest

#endif  // SENTEST_TEXT_H_
