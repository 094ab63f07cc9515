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

#ifndef SENTEST_TESTING_FIXTURE_SERVER_H_
#define SENTEST_TESTING_FIXTURE_SERVER_H_

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace httplib {
class Server;
}

namespace sentest::testing {

struct Reply {
  int status = 200;
  std::string body;
};

// In-process stand-in for an embedding server. The handler sees the parsed
// /embed request body and the zero-based index of the call.
class FixtureServer {
 public:
  using Handler =
      std::function<Reply(const nlohmann::json& request, std::size_t call)>;

  explicit FixtureServer(Handler handler,
                         Reply health = {200, R"({"status":"ok","model":"fixture-model"})"});
  ~FixtureServer();

  FixtureServer(const FixtureServer&) = delete;
  FixtureServer& operator=(const FixtureServer&) = delete;

  std::string url() const;
  std::size_t embed_calls() const { return embed_calls_.load(); }
  std::vector<std::size_t> batch_sizes() const;

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  Handler handler_;
  Reply health_;
  std::atomic<std::size_t> embed_calls_{0};
  mutable std::mutex mu_;
  std::vector<std::size_t> batch_sizes_;
};

// Contents of tests/data/http/<name>.
std::string HttpFixture(const std::string& name);

// Handler that answers every request with BowEmbed vectors of `dim`.
FixtureServer::Handler BowModelHandler(std::size_t dim);

}  // namespace sentest::testing

#endif  // SENTEST_TESTING_FIXTURE_SERVER_H_
