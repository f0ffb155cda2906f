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

#include "riskgame/cli/document.hpp"

#include <fstream>
#include <sstream>

#include "riskgame/analysis.hpp"

namespace riskgame::cli {

using nlohmann::json;

json fraction_json(const BigRational& value) {
  return json{{"num", numerator_string(value)},
              {"den", denominator_string(value)},
              {"approx", value.get_d()}};
}

json policy_document(const Solution& solution) {
  GameParams params(solution.n);
  json positions = json::array();
  for (const auto& p : alive_positions(params)) {
    std::string action = "toss";
    if (p.a >= 1) action = to_string(solution.policy.at(p));
    positions.push_back(json{{"a", p.a},
                             {"b", p.b},
                             {"c", p.c},
                             {"action", action},
                             {"p", fraction_json(solution.values.at(p))},
                             {"tie", solution.ties.count(p) > 0}});
  }
  return json{{"version", 1},
              {"n", solution.n},
              {"p_first", fraction_json(solution.p_first)},
              {"positions", std::move(positions)},
              {"thresholds", threshold_grid(extract_thresholds(solution))}};
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

BigRational read_fraction(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j["num"].is_string() || !j["den"].is_string()) {
    throw DocumentError(where + ": fraction needs string fields num and den");
  }
  const std::string num = j["num"].get<std::string>();
  const std::string den = j["den"].get<std::string>();
  BigRational value;
  try {
    value = parse_rational(num + "/" + den);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
  if (numerator_string(value) != num || denominator_string(value) != den) {
    throw DocumentError(where + ": fraction " + num + "/" + den +
                        " is not in lowest terms");
  }
  return value;
}

int read_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw DocumentError(where + ": missing integer field '" + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

Solution solution_from_document(const json& doc) {
  if (!doc.is_object()) throw DocumentError("policy document must be an object");
  if (read_int(doc, "version", "document") != 1) {
    throw DocumentError("unsupported policy document version");
  }
  const int n = read_int(doc, "n", "document");
  if (n < 2) throw DocumentError("policy document needs n >= 2");
  GameParams params(n);

  Solution solution;
  solution.n = n;
  if (!doc.contains("positions") || !doc["positions"].is_array()) {
    throw DocumentError("document: missing positions array");
  }
  auto expected = alive_positions(params);
  const auto& entries = doc["positions"];
  if (entries.size() != expected.size()) {
    throw DocumentError("document: expected " + std::to_string(expected.size()) +
                        " positions, found " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    const std::string where = "positions[" + std::to_string(i) + "]";
    Position p{read_int(e, "a", where), read_int(e, "b", where), read_int(e, "c", where)};
    if (p != expected[i]) {
      throw DocumentError(where + ": expected " + to_string(expected[i]) + ", found " +
                          to_string(p));
    }
    if (!e.contains("action") || !e["action"].is_string()) {
      throw DocumentError(where + ": missing action");
    }
    const std::string action = e["action"].get<std::string>();
    if (p.a == 0) {
      if (action != "toss") throw DocumentError(where + ": a = 0 must be 'toss'");
    } else if (action == "continue") {
      solution.policy[p] = Action::Continue;
    } else if (action == "stop") {
      solution.policy[p] = Action::Stop;
    } else {
      throw DocumentError(where + ": unknown action '" + action + "'");
    }
    if (!e.contains("p")) throw DocumentError(where + ": missing p");
    solution.values[p] = read_fraction(e["p"], where + ".p");
    if (e.contains("tie") && e["tie"].is_boolean() && e["tie"].get<bool>()) {
      solution.ties.insert(p);
    }
  }

  if (!doc.contains("p_first")) throw DocumentError("document: missing p_first");
  solution.p_first = read_fraction(doc["p_first"], "p_first");
  if (solution.p_first != solution.values.at({0, 0, 0})) {
    throw DocumentError("p_first disagrees with the value of (0,0,0)");
  }
  if (!doc.contains("thresholds") ||
      doc["thresholds"] != json(threshold_grid(extract_thresholds(solution)))) {
    throw DocumentError("thresholds disagree with the policy");
  }
  return solution;
}

Solution load_policy_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
  return solution_from_document(doc);
}

void write_policy_file(const std::filesystem::path& path, const Solution& solution) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << canonical_dump(policy_document(solution));
}

json state_answer(const Solution& solution, const Position& pos) {
  GameParams params(solution.n);
  if (!is_alive(pos, params)) {
    throw DeadPosition("position " + to_string(pos) + " is not alive for n=" +
                       std::to_string(solution.n));
  }
  json answer{{"a", pos.a},
              {"b", pos.b},
              {"c", pos.c},
              {"n", solution.n},
              {"p_win", fraction_json(solution.values.at(pos))}};
  if (pos.a == 0) {
    answer["legal_actions"] = json::array({"toss"});
    answer["recommended"] = "toss";
    return answer;
  }
  const ActionValues q = action_values(solution.values, pos, params);
  answer["legal_actions"] = json::array({"continue", "stop"});
  answer["recommended"] = to_string(solution.policy.at(pos));
  answer["p_if_continue"] = fraction_json(q.if_continue);
  answer["p_if_stop"] = fraction_json(q.if_stop);
  answer["tie"] = solution.ties.count(pos) > 0;
  return answer;
}

}  // namespace riskgame::cli
