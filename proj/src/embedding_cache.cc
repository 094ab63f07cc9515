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

#include "sentest/embedding_cache.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "sentest/errors.h"

namespace sentest {
namespace {

using nlohmann::json;

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

bool IsHexKey(const std::string& key) {
  return key.size() == 64 &&
         std::all_of(key.begin(), key.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

std::string EncodeLine(const std::string& key, const EmbeddingVector& vec) {
  json vals = json::array();
  for (float v : vec.values) vals.push_back(static_cast<double>(v));
  json line = {{"key", key}, {"dim", vec.dim()}, {"vec", std::move(vals)}};
  return line.dump();
}

// Returns false for any record that does not satisfy the line schema.
bool DecodeLine(std::string_view text, std::string* key,
                EmbeddingVector* vec) {
  json line = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!line.is_object()) return false;
  auto k = line.find("key");
  auto d = line.find("dim");
  auto v = line.find("vec");
  if (k == line.end() || d == line.end() || v == line.end()) return false;
  if (!k->is_string() || !d->is_number_unsigned() || !v->is_array()) {
    return false;
  }
  *key = k->get<std::string>();
  if (!IsHexKey(*key)) return false;
  std::vector<float> values;
  values.reserve(v->size());
  for (const auto& x : *v) {
    if (!x.is_number()) return false;
    values.push_back(static_cast<float>(x.get<double>()));
  }
  if (values.size() != d->get<std::size_t>() || values.empty()) return false;
  *vec = EmbeddingVector(std::move(values));
  return vec->AllFinite();
}

}  // namespace

EmbeddingCache::EmbeddingCache(const std::filesystem::path& path)
    : path_(path) {
  Replay();
}

void EmbeddingCache::Replay() {
  std::vector<std::string> order;
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) throw IoError("cannot open cache " + path_.string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::string key;
      EmbeddingVector vec;
      if (!DecodeLine(line, &key, &vec)) {
        // A torn write can only damage the tail; everything after the first
        // bad record is discarded.
        ++dropped_on_load_;
        while (std::getline(in, line)) ++dropped_on_load_;
        break;
      }
      if (entries_.find(key) == entries_.end()) order.push_back(key);
      entries_[key] = std::move(vec);
    }
  } else if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }

  // Compact: one line per live key, in first-seen order.
  const std::filesystem::path tmp = path_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cache " + tmp.string());
    for (const std::string& key : order) {
      out << EncodeLine(key, entries_.at(key)) << '\n';
    }
    if (!out) throw IoError("cannot write cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
  log_.open(path_, std::ios::binary | std::ios::app);
  if (!log_) throw IoError("cannot append to cache " + path_.string());
}

std::string EmbeddingCache::Key(std::string_view provider_name,
                                std::string_view text) {
  std::string material;
  material.reserve(provider_name.size() + 1 + text.size());
  material.append(provider_name);
  material.push_back('\0');
  material.append(text);
  return Sha256Hex(material);
}

std::optional<EmbeddingVector> EmbeddingCache::Get(
    const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void EmbeddingCache::Put(const std::string& key, const EmbeddingVector& vec) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[key] = vec;
  if (log_.is_open()) {
    log_ << EncodeLine(key, vec) << '\n';
    log_.flush();
    if (!log_) throw IoError("cache append failed: " + path_.string());
  }
}

std::size_t EmbeddingCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::size_t EmbeddingCache::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

std::size_t EmbeddingCache::misses() const {
  std::lock_guard<std::mutex> lock(mu_);
  return misses_;
}

}  // namespace sentest
