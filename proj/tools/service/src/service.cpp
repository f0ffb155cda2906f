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


#include "riskgame/cli/service.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "riskgame/analysis.hpp"
#include "riskgame/cli/document.hpp"

namespace riskgame::cli {

using nlohmann::json;

namespace {

const std::vector<std::pair<std::string, std::string>>& cors_headers() {
  static const std::vector<std::pair<std::string, std::string>> headers = {
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  };
  return headers;
}

Response reply(int status, std::string body) {
  return {status, std::move(body), cors_headers()};
}

Response error(int status, const std::string& message) {
  return reply(status, json{{"error", message}}.dump() + "\n");
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t slash = path.find('/', start);
    if (slash == std::string::npos) slash = path.size();
    parts.push_back(path.substr(start, slash - start));
    start = slash + 1;
  }
  return parts;
}

}  // namespace

PolicyService::PolicyService(std::vector<Solution> solutions) {
  for (auto& solution : solutions) {
    const int n = solution.n;
    if (entries_.count(n)) {
      throw std::invalid_argument("duplicate solution for n=" + std::to_string(n));
    }
    Entry entry;
    entry.policy_body = canonical_dump(policy_document(solution));
    entry.table_body = to_json(extract_thresholds(solution));
    entry.solution = std::move(solution);
    entries_.emplace(n, std::move(entry));
  }
}

std::vector<int> PolicyService::targets() const {
  std::vector<int> out;
  for (const auto& [n, entry] : entries_) out.push_back(n);
  return out;
}

const PolicyService::Entry* PolicyService::find(int n) const {
  auto it = entries_.find(n);
  return it == entries_.end() ? nullptr : &it->second;
}

Response PolicyService::handle(const std::string& method, const std::string& path,
                               const std::multimap<std::string, std::string>& query) const {
  if (method == "OPTIONS") return reply(204, "");
  if (method != "GET" && method != "HEAD") {
    Response r = error(405, "read-only API; use GET");
    r.headers.emplace_back("Allow", "GET, OPTIONS");
    return r;
  }
  return get(path, query);
}

Response PolicyService::get(const std::string& path,
                            const std::multimap<std::string, std::string>& query) const {
  // "/api/v1/x/y" splits into "", "api", "v1", "x", "y".
  const auto parts = split_path(path);
  if (parts.size() < 4 || !parts[0].empty() || parts[1] != "api" || parts[2] != "v1") {
    return error(404, "no such endpoint: " + path);
  }
  const std::string& what = parts[3];
  if (parts.size() == 4) {
    if (what == "healthz") return reply(200, json{{"status", "ok"}}.dump() + "\n");
    if (what == "state") return state(query);
  }
  if (parts.size() == 5 && (what == "policy" || what == "table")) {
    auto n = parse_int(parts[4]);
    if (!n) return error(400, "target must be an integer, got '" + parts[4] + "'");
    const Entry* entry = find(*n);
    if (!entry) return error(404, "no solution for n=" + parts[4]);
    return reply(200, what == "policy" ? entry->policy_body : entry->table_body);
  }
  return error(404, "no such endpoint: " + path);
}

Response PolicyService::state(const std::multimap<std::string, std::string>& query) const {
  int fields[4] = {0, 0, 0, 0};
  const char* names[4] = {"n", "a", "b", "c"};
  for (int i = 0; i < 4; ++i) {
    auto [first, last] = query.equal_range(names[i]);
    if (first == last) return error(400, std::string("missing query parameter ") + names[i]);
    if (std::next(first) != last) {
      return error(400, std::string("repeated query parameter ") + names[i]);
    }
    auto value = parse_int(first->second);
    if (!value) {
      return error(400, std::string(names[i]) + " must be an integer, got '" +
                            first->second + "'");
    }
    fields[i] = *value;
  }
  const Entry* entry = find(fields[0]);
  if (!entry) return error(404, "no solution for n=" + std::to_string(fields[0]));
  const Position pos{fields[1], fields[2], fields[3]};
  if (pos.a < 0 || pos.b < 0 || pos.c < 0 || !is_alive(pos, GameParams(fields[0]))) {
    return error(404, "position " + to_string(pos) + " is not alive for n=" +
                          std::to_string(fields[0]));
  }
  return reply(200, canonical_dump(state_answer(entry->solution, pos)));
}

HttpServer::HttpServer(const PolicyService& service)
    : server_(std::make_unique<httplib::Server>()) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const Response r = service.handle(req.method, req.path, req.params);
    res.status = r.status;
    for (const auto& [key, value] : r.headers) res.set_header(key, value);
    if (r.status != 204) res.set_content(r.body, "application/json");
  };
  const std::string any = ".*";
  server_->Get(any, forward);
  server_->Options(any, forward);
  server_->Post(any, forward);
  server_->Put(any, forward);
  server_->Patch(any, forward);
  server_->Delete(any, forward);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw std::runtime_error("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace riskgame::cli
