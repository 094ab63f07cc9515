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

#include "testing/fixture_server.h"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "httplib.h"
#include "sentest/mock_embedders.h"

namespace sentest::testing {

using nlohmann::json;

FixtureServer::FixtureServer(Handler handler, Reply health)
    : server_(std::make_unique<httplib::Server>()),
      handler_(std::move(handler)),
      health_(std::move(health)) {
  server_->Post("/embed", [this](const httplib::Request& req,
                                 httplib::Response& res) {
    const std::size_t call = embed_calls_.fetch_add(1);
    json body = json::parse(req.body, nullptr, false);
    if (body.is_object() && body.contains("texts") && body["texts"].is_array()) {
      std::lock_guard<std::mutex> lock(mu_);
      batch_sizes_.push_back(body["texts"].size());
    }
    const Reply reply = handler_(body, call);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server_->Get("/health", [this](const httplib::Request&, httplib::Response& res) {
    res.status = health_.status;
    res.set_content(health_.body, "application/json");
  });
  port_ = server_->bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("fixture server: bind failed");
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

FixtureServer::~FixtureServer() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string FixtureServer::url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

std::vector<std::size_t> FixtureServer::batch_sizes() const {
  std::lock_guard<std::mutex> lock(mu_);
  return batch_sizes_;
}

std::string HttpFixture(const std::string& name) {
  const std::string path = std::string(SENTEST_TEST_DATA) + "/http/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FixtureServer::Handler BowModelHandler(std::size_t dim) {
  return [dim](const json& request, std::size_t) {
    json rows = json::array();
    for (const auto& t : request.at("texts")) {
      const EmbeddingVector v = BowEmbed(t.get<std::string>(), dim);
      json row = json::array();
      for (float x : v.values) row.push_back(x);
      rows.push_back(std::move(row));
    }
    return Reply{200, json{{"model", request.value("model", "")},
                           {"dim", dim},
                           {"embeddings", rows}}
                          .dump()};
  };
}

}  // namespace sentest::testing
