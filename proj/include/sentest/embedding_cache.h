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

#ifndef SENTEST_EMBEDDING_CACHE_H_
#define SENTEST_EMBEDDING_CACHE_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "sentest/embedding.h"

namespace sentest {

// Content-addressed embedding store. Keys are SHA-256 over
// provider_name ++ 0x00 ++ text, in lowercase hex.
//
// With a backing file the store is an append-only JSONL log, one
// {"key", "dim", "vec"} object per line. Opening replays the log
// (last write wins), drops a torn trailing record and rewrites the file
// compacted. All methods are safe to call concurrently.
class EmbeddingCache {
 public:
  // Memory-only cache.
  EmbeddingCache() = default;
  // Throws IoError if the file cannot be read or rewritten.
  explicit EmbeddingCache(const std::filesystem::path& path);

  EmbeddingCache(const EmbeddingCache&) = delete;
  EmbeddingCache& operator=(const EmbeddingCache&) = delete;

  static std::string Key(std::string_view provider_name,
                         std::string_view text);

  std::optional<EmbeddingVector> Get(const std::string& key) const;
  void Put(const std::string& key, const EmbeddingVector& vec);

  std::size_t size() const;
  std::size_t hits() const;
  std::size_t misses() const;
  // Records dropped while replaying the log.
  std::size_t dropped_on_load() const { return dropped_on_load_; }

 private:
  void Replay();

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, EmbeddingVector> entries_;
  std::ofstream log_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
  std::size_t dropped_on_load_ = 0;
};

}  // namespace sentest

#endif  // SENTEST_EMBEDDING_CACHE_H_
