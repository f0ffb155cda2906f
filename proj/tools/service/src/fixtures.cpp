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


#include "riskgame/cli/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "riskgame/analysis.hpp"
#include "riskgame/analytic.hpp"
#include "riskgame/interval.hpp"
#include "riskgame/simulation.hpp"

namespace riskgame::cli {

namespace {

class Collector {
 public:
  void fraction(std::string name, const BigRational& expected, const BigRational& actual) {
    results_.push_back({std::move(name), to_string(expected), to_string(actual),
                        expected == actual});
  }
  void text(std::string name, std::string expected, std::string actual) {
    const bool same = expected == actual;
    results_.push_back({std::move(name), std::move(expected), std::move(actual), same});
  }
  std::vector<FixtureResult> take() { return std::move(results_); }

 private:
  std::vector<FixtureResult> results_;
};

std::string describe(const std::set<Position>& positions) {
  std::string out = "{";
  for (const auto& p : positions) {
    if (out.size() > 1) out += ",";
    out += to_string(p);
  }
  return out + "}";
}

std::set<Position> reachable_stops(const Solution& solution) {
  std::set<Position> stops;
  for (const auto& p : reachable_positions(GameParams(solution.n), solution.policy)) {
    if (p.a >= 1 && solution.policy.at(p) == Action::Stop) stops.insert(p);
  }
  return stops;
}

// First decision position whose chosen action is beaten, or empty.
std::string first_suboptimal(const Solution& solution) {
  GameParams params(solution.n);
  for (const auto& p : decision_positions(params)) {
    const ActionValues q = action_values(solution.values, p, params);
    const bool stop = solution.policy.at(p) == Action::Stop;
    const BigRational& chosen = stop ? q.if_stop : q.if_continue;
    const BigRational& other = stop ? q.if_continue : q.if_stop;
    if (chosen < other || solution.values.at(p) != chosen) return to_string(p);
  }
  return "";
}

std::string first_value_difference(const Solution& x, const Solution& y) {
  if (x.values.size() != y.values.size()) return "value maps differ in size";
  for (const auto& [p, v] : x.values) {
    auto it = y.values.find(p);
    if (it == y.values.end() || it->second != v) return "value at " + to_string(p);
  }
  for (const auto& [p, action] : x.policy) {
    auto it = y.policy.find(p);
    if (it == y.policy.end() || it->second != action) return "action at " + to_string(p);
  }
  return "";
}

StrategyAssignment with(const StrategyAssignment& base,
                        std::initializer_list<std::pair<Position, Action>> changes) {
  StrategyAssignment out = base;
  for (const auto& [p, action] : changes) out.decisions[p] = action;
  return out;
}

StrategyAssignment restrict(const Solution& solution) {
  StrategyAssignment out{solution.n, {}};
  for (const auto& p : strategy_positions(GameParams(solution.n))) {
    out.decisions[p] = solution.policy.at(p);
  }
  return out;
}

}  // namespace

std::vector<FixtureResult> run_fixtures(int n_max, std::size_t analytic_budget) {
  Collector check;
  const std::map<int, BigRational> first_values = {
      {2, rational(4, 7)},
      {3, rational(6, 11)},
      {4, rational(2236, 4165)},
      {5, rational(1026, 1925)},
      {6, parse_rational("275848876/521145625")},
  };

  std::map<int, Solution> solved;
  for (int n = 2; n <= std::max(n_max, 4); ++n) solved.emplace(n, solve_iterative(GameParams(n)));

  for (int n = 2; n <= n_max; ++n) {
    const Solution& iterative = solved.at(n);
    const std::string tag = "n=" + std::to_string(n);
    if (auto it = first_values.find(n); it != first_values.end()) {
      check.fraction(tag + " P(0,0,0) iterative", it->second, iterative.p_first);
    }
    check.text(tag + " one-step optimality", "", first_suboptimal(iterative));
    if (n <= 6) {
      AnalyticOptions options;
      options.budget = analytic_budget;
      const StrategyReport analytic = solve_analytic(GameParams(n), options);
      if (auto it = first_values.find(n); it != first_values.end()) {
        check.fraction(tag + " P(0,0,0) analytic", it->second, analytic.solution.p_first);
      }
      check.text(tag + " analytic and iterative agree", "",
                 first_value_difference(analytic.solution, iterative));
    }
    if (n <= 10) {
      check.fraction(tag + " exact pair value", iterative.p_first,
                     exact_pair_value(symmetric_pair(iterative)));
    }
  }

  const Solution& s2 = solved.at(2);
  const Solution& s3 = solved.at(3);
  check.fraction("n=2 P(0,1,1)", rational(2, 3), s2.values.at({0, 1, 1}));
  const std::vector<std::pair<Position, BigRational>> worked = {
      {{0, 2, 0}, rational(8, 9)},  {{0, 1, 0}, rational(8, 11)},
      {{0, 2, 1}, rational(4, 5)},  {{0, 2, 2}, rational(2, 3)},
      {{0, 1, 1}, rational(4, 7)},  {{0, 1, 2}, rational(2, 5)},
      {{0, 0, 1}, rational(4, 11)}, {{0, 0, 2}, rational(2, 9)},
  };
  for (const auto& [p, value] : worked) {
    check.fraction("n=3 P" + to_string(p), value, s3.values.at(p));
  }

  check.text("n=3 reachable stops", "{(1,0,0)}", describe(reachable_stops(s3)));
  check.text("n=4 reachable stops", "{(1,2,0),(2,0,0),(2,0,2)}",
             describe(reachable_stops(solved.at(4))));

  // Fixed strategies for n = 2 and the two left branches of n = 3.
  const KnownValues known1 = known_from(solve_analytic(GameParams(1)).solution);
  const StrategyAssignment strategy1{2, {{{1, 0, 0}, Action::Continue},
                                         {{1, 0, 1}, Action::Continue}}};
  const auto strategy2 = with(strategy1, {{{1, 0, 0}, Action::Stop}});
  const auto strategy3 = with(strategy2, {{{1, 0, 1}, Action::Stop}});
  check.fraction("n=2 strategy 1 P(0,0,0)", rational(4, 7),
                 evaluate_strategy(strategy1, known1).at({0, 0, 0}));
  check.fraction("n=2 strategy 2 P(0,0,0)", rational(8, 15),
                 evaluate_strategy(strategy2, known1).at({0, 0, 0}));
  check.fraction("n=2 strategy 2 P(0,0,1)", rational(2, 5),
                 evaluate_strategy(strategy2, known1).at({0, 0, 1}));
  check.fraction("n=2 strategy 3 P(0,0,1)", rational(2, 9),
                 evaluate_strategy(strategy3, known1).at({0, 0, 1}));
  check.fraction("n=2 strategy 2 pair value", rational(8, 15),
                 exact_pair_value({2, strategy2.decisions, strategy2.decisions}));

  const KnownValues known2 = known_from(s2);
  const StrategyAssignment base3 = restrict(s3);
  const auto keep_100 = with(base3, {{{1, 0, 0}, Action::Continue}, {{2, 0, 0}, Action::Continue}});
  const auto bank_200 = with(base3, {{{1, 0, 0}, Action::Continue}, {{2, 0, 0}, Action::Stop}});
  check.fraction("n=3 P(1,0,0) tossing on at (2,0,0)", rational(3, 5),
                 evaluate_strategy(keep_100, known2).at({1, 0, 0}));
  check.fraction("n=3 P(1,0,0) banking at (2,0,0)", rational(13, 21),
                 evaluate_strategy(bank_200, known2).at({1, 0, 0}));
  const auto keep_102 = with(base3, {{{1, 0, 2}, Action::Continue}, {{2, 0, 2}, Action::Continue}});
  const auto bank_202 = with(base3, {{{1, 0, 2}, Action::Continue}, {{2, 0, 2}, Action::Stop}});
  check.fraction("n=3 P(1,0,2) tossing on at (2,0,2)", rational(1, 3),
                 evaluate_strategy(keep_102, known2).at({1, 0, 2}));
  check.fraction("n=3 P(1,0,2) banking at (2,0,2)", rational(1, 5),
                 evaluate_strategy(bank_202, known2).at({1, 0, 2}));
  check.fraction("n=3 P(0,0,2) banking at (2,0,2)", rational(2, 15),
                 evaluate_strategy(bank_202, known2).at({0, 0, 2}));

  check.fraction("p_all(1)", rational(2, 3), p_all(1));
  check.fraction("p_all(2)", rational(2, 5), p_all(2));
  check.fraction("p_all(3)", rational(2, 9), p_all(3));
  check.fraction("p_split(2,1)", rational(2, 9), p_split(2, 1));
  check.fraction("p_split(3,1)", rational(2, 15), p_split(3, 1));

  return check.take();
}

std::size_t print_fixtures(const std::vector<FixtureResult>& results, std::ostream& out) {
  std::size_t failures = 0;
  for (const auto& r : results) {
    if (r.passed) {
      out << "ok    " << r.name << "\n";
      continue;
    }
    ++failures;
    out << "FAIL  " << r.name << "\n"
        << "  - expected: " << (r.expected.empty() ? "(nothing)" : r.expected) << "\n"
        << "  + actual:   " << (r.actual.empty() ? "(nothing)" : r.actual) << "\n";
  }
  out << results.size() - failures << "/" << results.size() << " fixtures passed\n";
  return failures;
}

}  // namespace riskgame::cli
