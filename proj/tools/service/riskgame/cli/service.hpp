// Copyright 2026 The riskgame Authors
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


#ifndef RISKGAME_CLI_SERVICE_HPP
#define RISKGAME_CLI_SERVICE_HPP

// Read-only JSON API over a fixed set of solutions:
//
//   GET /api/v1/policy/{n}            policy document
//   GET /api/v1/state?n=&a=&b=&c=     state answer, 404 for a dead position
//   GET /api/v1/table/{n}             {"n": n, "rows": thresholds grid}
//   GET /api/v1/healthz               {"status": "ok"}
//
// Malformed paths or queries answer 400, unknown targets 404. Every response,
// errors included, carries permissive CORS headers.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "riskgame/policy.hpp"

namespace httplib {
class Server;
}

namespace riskgame::cli {

struct Response {
  int status = 200;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

class PolicyService {
 public:
  // Throws std::invalid_argument when two solutions share a target.
  explicit PolicyService(std::vector<Solution> solutions);

  Response handle(const std::string& method, const std::string& path,
                  const std::multimap<std::string, std::string>& query) const;

  std::vector<int> targets() const;

 private:
  struct Entry {
    Solution solution;
    std::string policy_body;
    std::string table_body;
  };

  Response get(const std::string& path,
               const std::multimap<std::string, std::string>& query) const;
  Response state(const std::multimap<std::string, std::string>& query) const;
  const Entry* find(int n) const;

  std::map<int, Entry> entries_;
};

// cpp-httplib front end; the service must outlive the server.
class HttpServer {
 public:
  explicit HttpServer(const PolicyService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws
  // std::runtime_error when binding fails.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called.
  void listen();
  void stop();
  // Blocks until the server accepts connections.
  void wait_until_ready() const;

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace riskgame::cli

#endif  // RISKGAME_CLI_SERVICE_HPP
