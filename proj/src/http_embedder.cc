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

#include "sentest/http_embedder.h"

#include <cmath>
#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "sentest/errors.h"

namespace sentest {
namespace {

using nlohmann::json;

std::string RangeText(std::size_t begin, std::size_t end) {
  return "[" + std::to_string(begin) + ", " + std::to_string(end) + ")";
}

}  // namespace

HttpEmbedder::HttpEmbedder(HttpEmbedderOptions options)
    : options_(std::move(options)) {
  if (options_.model.empty()) throw ConfigError("http embedder needs a model");
  if (options_.batch_size == 0) throw ConfigError("batch_size must be >= 1");
  const std::string& url = options_.endpoint;
  const std::string scheme = "http://";
  if (url.rfind(scheme, 0) != 0) {
    throw ConfigError("endpoint must start with http://, got \"" + url + "\"");
  }
  const std::size_t slash = url.find('/', scheme.size());
  host_ = url.substr(0, slash);
  if (host_.size() == scheme.size()) {
    throw ConfigError("endpoint has no host: \"" + url + "\"");
  }
  if (slash != std::string::npos) path_prefix_ = url.substr(slash);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') {
    path_prefix_.pop_back();
  }
  dim_ = options_.dim;
}

std::string HttpEmbedder::Health() const {
  httplib::Client client(host_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  auto res = client.Get(path_prefix_ + "/health");
  if (!res) {
    throw ProviderError(0, 0, "health check failed: " +
                                  httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw ProviderError(0, 0, "health check returned status " +
                                  std::to_string(res->status));
  }
  json body = json::parse(res->body, nullptr, false);
  if (!body.is_object() || body.value("status", "") != "ok" ||
      !body.contains("model") || !body["model"].is_string()) {
    throw ProtocolError("malformed health response");
  }
  return body["model"].get<std::string>();
}

std::vector<EmbeddingVector> HttpEmbedder::DoEmbed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (std::size_t b = 0; b < texts.size(); b += options_.batch_size) {
    const std::size_t n = std::min(options_.batch_size, texts.size() - b);
    SendBatch(texts.subspan(b, n), b, &out);
  }
  return out;
}

void HttpEmbedder::SendBatch(std::span<const std::string> texts,
                             std::size_t offset,
                             std::vector<EmbeddingVector>* out) {
  const std::size_t end = offset + texts.size();
  const std::string body =
      json{{"model", options_.model},
           {"texts", std::vector<std::string>(texts.begin(), texts.end())}}
          .dump();

  httplib::Client client(host_);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_write_timeout(options_.timeout);

  std::string last_failure;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(options_.backoff_base * (1 << (attempt - 1)));
    }
    ++requests_;
    auto res = client.Post(path_prefix_ + "/embed", body, "application/json");
    if (!res) {
      last_failure = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    const int status = res->status;
    if (status == 200) {
      auto vecs = ParseResponse(res->body, texts.size());
      for (auto& v : vecs) out->push_back(std::move(v));
      return;
    }
    if (status == 400) {
      throw RequestError("embed request " + RangeText(offset, end) +
                         " rejected (400): " + res->body);
    }
    if (status == 413) {
      if (texts.size() == 1) {
        throw ProviderError(offset, end,
                            "server refuses even a single text (413) at " +
                                RangeText(offset, end));
      }
      const std::size_t half = texts.size() / 2;
      SendBatch(texts.first(half), offset, out);
      SendBatch(texts.subspan(half), offset + half, out);
      return;
    }
    if (status >= 500) {
      last_failure = "status " + std::to_string(status);
      continue;
    }
    throw ProviderError(offset, end,
                        "unexpected status " + std::to_string(status) +
                            " for batch " + RangeText(offset, end));
  }
  throw ProviderError(offset, end,
                      "batch " + RangeText(offset, end) + " failed after " +
                          std::to_string(options_.max_retries) +
                          " retries: " + last_failure);
}

std::vector<EmbeddingVector> HttpEmbedder::ParseResponse(
    const std::string& body, std::size_t expected_count) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ProtocolError("response body is not a JSON object");
  }
  auto dim_it = doc.find("dim");
  auto emb_it = doc.find("embeddings");
  if (dim_it == doc.end() || !dim_it->is_number_unsigned() ||
      dim_it->get<std::size_t>() == 0) {
    throw ProtocolError("response lacks a positive integer \"dim\"");
  }
  if (emb_it == doc.end() || !emb_it->is_array()) {
    throw ProtocolError("response lacks an \"embeddings\" array");
  }
  const std::size_t dim = dim_it->get<std::size_t>();
  if (emb_it->size() != expected_count) {
    throw ProtocolError("expected " + std::to_string(expected_count) +
                        " embeddings, got " + std::to_string(emb_it->size()));
  }

  std::size_t expected_dim = 0;
  if (!dim_.compare_exchange_strong(expected_dim, dim) && expected_dim != dim) {
    throw ProtocolError("response dim " + std::to_string(dim) +
                        " differs from session dim " +
                        std::to_string(expected_dim));
  }

  std::vector<EmbeddingVector> out;
  out.reserve(expected_count);
  for (std::size_t i = 0; i < emb_it->size(); ++i) {
    const json& row = (*emb_it)[i];
    if (!row.is_array() || row.size() != dim) {
      throw ProtocolError("embedding " + std::to_string(i) +
                          " does not have dim " + std::to_string(dim));
    }
    std::vector<float> values;
    values.reserve(dim);
    for (const json& x : row) {
      if (!x.is_number()) {
        throw ProtocolError("embedding " + std::to_string(i) +
                            " has a non-numeric value");
      }
      const auto v = static_cast<float>(x.get<double>());
      if (!std::isfinite(v)) {
        throw ProtocolError("embedding " + std::to_string(i) +
                            " has a non-finite value");
      }
      values.push_back(v);
    }
    out.emplace_back(std::move(values));
  }
  return out;
}

}  // namespace sentest
