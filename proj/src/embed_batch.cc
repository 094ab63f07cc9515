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

#include <cmath>
#include <unordered_map>

#include "sentest/embedding.h"
#include "sentest/embedding_cache.h"
#include "sentest/errors.h"
#include "sentest/text.h"

namespace sentest {

bool EmbeddingVector::AllFinite() const {
  for (float v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double EmbeddingVector::Norm() const {
  double sq = 0.0;
  for (float v : values) sq += static_cast<double>(v) * v;
  return std::sqrt(sq);
}

std::vector<EmbeddingVector> EmbedBatch(EmbeddingProvider& provider,
                                        std::span<const std::string> texts,
                                        EmbeddingCache* cache) {
  if (texts.empty()) throw InvalidArgumentError("embed_batch: no texts");
  const std::size_t limit = provider.max_text_length();
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (Utf8Length(texts[i]) > limit) {
      throw InvalidArgumentError("embed_batch: text " + std::to_string(i) +
                                 " exceeds " + std::to_string(limit) +
                                 " characters");
    }
  }

  const std::string name = provider.name();

  // Each distinct text resolves either to a cached vector or to one slot of
  // the request sent to the provider.
  struct Source {
    bool cached;
    std::size_t index;
  };
  std::unordered_map<std::string_view, Source> sources;
  std::vector<Source> per_text(texts.size());
  std::vector<EmbeddingVector> cached;
  std::vector<std::string> miss_texts;
  std::vector<std::string> miss_keys;
  std::vector<std::size_t> first_position;

  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (auto it = sources.find(texts[i]); it != sources.end()) {
      per_text[i] = it->second;
      continue;
    }
    Source src{false, miss_texts.size()};
    std::string key;
    if (cache != nullptr) {
      key = EmbeddingCache::Key(name, texts[i]);
      if (auto hit = cache->Get(key)) {
        src = Source{true, cached.size()};
        cached.push_back(std::move(*hit));
      }
    }
    if (!src.cached) {
      miss_texts.push_back(texts[i]);
      miss_keys.push_back(std::move(key));
      first_position.push_back(i);
    }
    sources.emplace(texts[i], src);
    per_text[i] = src;
  }

  std::vector<EmbeddingVector> fresh;
  if (!miss_texts.empty()) {
    try {
      fresh = provider.Embed(miss_texts);
    } catch (const ProviderError& e) {
      // Translate the range into positions of the caller's list.
      const std::size_t n = first_position.size();
      const std::size_t b =
          e.begin() < n ? first_position[e.begin()] : texts.size();
      const std::size_t end = (e.end() >= 1 && e.end() <= n)
                                  ? first_position[e.end() - 1] + 1
                                  : texts.size();
      throw ProviderError(b, end, e.what());
    }
    if (fresh.size() != miss_texts.size()) {
      throw ProtocolError("provider returned " + std::to_string(fresh.size()) +
                          " vectors for " + std::to_string(miss_texts.size()) +
                          " texts");
    }
  }

  std::size_t session_dim = provider.dim();
  auto check = [&](const EmbeddingVector& v, std::size_t at) {
    if (session_dim == 0) session_dim = v.dim();
    if (v.dim() != session_dim || v.dim() == 0) {
      throw ProtocolError("embedding " + std::to_string(at) + " has dim " +
                          std::to_string(v.dim()) + ", session dim is " +
                          std::to_string(session_dim));
    }
    if (!v.AllFinite()) {
      throw ProtocolError("embedding " + std::to_string(at) +
                          " has non-finite values");
    }
  };
  for (std::size_t c = 0; c < cached.size(); ++c) check(cached[c], c);
  for (std::size_t m = 0; m < fresh.size(); ++m) {
    check(fresh[m], first_position[m]);
  }
  if (cache != nullptr) {
    for (std::size_t m = 0; m < fresh.size(); ++m) {
      cache->Put(miss_keys[m], fresh[m]);
    }
  }

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const Source& src : per_text) {
    out.push_back(src.cached ? cached[src.index] : fresh[src.index]);
  }
  return out;
}

}  // namespace sentest
