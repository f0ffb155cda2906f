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


// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "riskgame/analysis.hpp"
#include "riskgame/analytic.hpp"
#include "riskgame/interval.hpp"
#include "riskgame/simulation.hpp"
#include "support/table_one.hpp"

namespace {

using namespace riskgame;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::map<int, Solution> iterative;

const Solution& solved(int n) {
  auto it = iterative.find(n);
  if (it == iterative.end()) it = iterative.emplace(n, solve_iterative(GameParams(n))).first;
  return it->second;
}

const std::map<int, std::string> kFirstPlayer = {
    {2, "4/7"}, {3, "6/11"}, {4, "2236/4165"}, {5, "1026/1925"},
    {6, "275848876/521145625"}};

int failures = 0;

void report(const char* name, const std::function<std::string()>& check) {
  std::string problem;
  const auto start = Clock::now();
  try {
    problem = check();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(start);
  if (problem.empty()) {
    std::printf("PASS  %-28s (%.2fs)\n", name, elapsed);
  } else {
    std::printf("FAIL  %-28s (%.2fs) %s\n", name, elapsed, problem.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::string first_player_values() {
  std::ostringstream problems;
  auto start = Clock::now();
  for (int n = 2; n <= 5; ++n) {
    const BigRational want = parse_rational(kFirstPlayer.at(n));
    if (solve_analytic(GameParams(n)).solution.p_first != want) {
      problems << "analytic n=" << n << " wrong; ";
    }
    if (solve_iterative(GameParams(n)).p_first != want) problems << "iterative n=" << n << " wrong; ";
  }
  if (double t = seconds_since(start); t >= 5.0) problems << "n<=5 took " << t << "s; ";

  start = Clock::now();
  const Solution six = solve_iterative(GameParams(6));
  if (double t = seconds_since(start); t >= 1.0) problems << "n=6 iterative took " << t << "s; ";
  if (six.p_first != parse_rational(kFirstPlayer.at(6))) problems << "iterative n=6 wrong; ";

  start = Clock::now();
  const Solution six_analytic = solve_analytic(GameParams(6)).solution;
  if (double t = seconds_since(start); t >= 600.0) problems << "n=6 analytic took " << t << "s; ";
  if (six_analytic.p_first != parse_rational(kFirstPlayer.at(6))) problems << "analytic n=6 wrong; ";
  return problems.str();
}

std::string worked_example() {
  const std::map<Position, std::string> expected = {
      {{0, 2, 0}, "8/9"}, {{0, 1, 0}, "8/11"}, {{0, 2, 1}, "4/5"}, {{0, 2, 2}, "2/3"},
      {{0, 1, 1}, "4/7"}, {{0, 1, 2}, "2/5"},  {{0, 0, 1}, "4/11"}, {{0, 0, 2}, "2/9"}};
  std::ostringstream problems;
  const Solution& s = solved(3);
  for (const auto& [p, v] : expected) {
    if (s.values.at(p) != parse_rational(v)) {
      problems << to_string(p) << "=" << to_string(s.values.at(p)) << " want " << v << "; ";
    }
  }
  return problems.str();
}

std::set<Position> reachable_stops(const Solution& s) {
  std::set<Position> stops;
  for (const auto& p : reachable_positions(GameParams(s.n), s.policy)) {
    if (p.a >= 1 && s.policy.at(p) == Action::Stop) stops.insert(p);
  }
  return stops;
}

std::string policy_fixtures() {
  std::ostringstream problems;
  if (reachable_stops(solved(3)) != std::set<Position>{{1, 0, 0}}) problems << "n=3 stop set; ";
  if (reachable_stops(solved(4)) != std::set<Position>{{1, 2, 0}, {2, 0, 0}, {2, 0, 2}}) {
    problems << "n=4 stop set; ";
  }
  return problems.str();
}

std::string table_one() {
  const auto start = Clock::now();
  const Solution twenty = solve_iterative(GameParams(20));
  const double elapsed = seconds_since(start);
  const ThresholdTable table = extract_thresholds(twenty);
  const auto published = testing::published_thresholds();
  std::ostringstream problems;
  int wrong = 0;
  for (int r = 2; r <= 20; ++r) {
    for (int s = 2; s <= 20; ++s) {
      if (table.at(r, s) != published[r - 2][s - 2]) ++wrong;
    }
  }
  if (wrong) problems << wrong << " cells differ; ";
  if (elapsed >= 60.0) problems << "solve took " << elapsed << "s; ";
  iterative.emplace(20, twenty);
  return problems.str();
}

std::string method_agreement() {
  std::ostringstream problems;
  for (int n = 2; n <= 5; ++n) {
    const Solution analytic = solve_analytic(GameParams(n)).solution;
    const Solution& it = solved(n);
    for (const auto& p : reachable_positions(GameParams(n), it.policy)) {
      if (analytic.values.at(p) != it.values.at(p)) problems << "value n=" << n << " " << to_string(p) << "; ";
      if (p.a >= 1 && analytic.policy.at(p) != it.policy.at(p)) {
        problems << "action n=" << n << " " << to_string(p) << "; ";
      }
    }
    if (reachable_positions(GameParams(n), analytic.policy) !=
        reachable_positions(GameParams(n), it.policy)) {
      problems << "reachable sets n=" << n << "; ";
    }
  }
  return problems.str();
}

std::string all_in() {
  std::ostringstream problems;
  for (int r = 2; r <= 30; ++r) {
    const BigRational all = p_all(r);
    for (int x = 1; x <= r - 1; ++x) {
      if (!(p_split(r, x) < all)) problems << "r=" << r << " x=" << x << "; ";
    }
  }
  return problems.str();
}

std::string counts() {
  std::ostringstream problems;
  for (long n = 2; n <= 50; ++n) {
    const GameParams params(static_cast<int>(n));
    if (static_cast<long>(new_positions(params).size()) != (3 * n * n - n) / 2) {
      problems << "new n=" << n << "; ";
    }
    if (static_cast<long>(decision_positions(params).size()) != (n - 1) * n * n / 2) {
      problems << "decision n=" << n << "; ";
    }
  }
  return problems.str();
}

std::string needs_consistency() {
  const ThresholdTable twelve = extract_thresholds(solved(12));
  const ThresholdTable twenty = extract_thresholds(solved(20));
  std::ostringstream problems;
  for (const auto& [cell, t] : twelve.entries) {
    if (twenty.entries.at(cell) != t) problems << "(" << cell.first << "," << cell.second << "); ";
  }
  return problems.str();
}

std::string security() {
  std::ostringstream problems;
  for (int n = 2; n <= 4; ++n) {
    const Solution& s = solved(n);
    const BigRational value = exact_pair_value(symmetric_pair(s));
    if (value != s.p_first) problems << "pair value n=" << n << "; ";
    for (const auto& [p, action] : s.policy) {
      PolicyMap deviation = s.policy;
      deviation[p] = action == Action::Stop ? Action::Continue : Action::Stop;
      if (exact_pair_value({n, deviation, s.policy}) > value) {
        problems << "first gains at n=" << n << " " << to_string(p) << "; ";
      }
      if (exact_pair_value({n, s.policy, deviation}) < value) {
        problems << "second gains at n=" << n << " " << to_string(p) << "; ";
      }
    }
  }
  return problems.str();
}

std::string monte_carlo() {
  std::ostringstream problems;
  const auto start = Clock::now();
  for (int n : {3, 6}) {
    const TrialReport r = estimate(symmetric_pair(solved(n)), 1000000, 20260101 + n);
    const double exact = parse_rational(kFirstPlayer.at(n)).get_d();
    if (std::fabs(r.estimate - exact) > 3.0 * r.std_error) {
      problems << "n=" << n << " estimate " << r.estimate << " vs " << exact << "; ";
    }
  }
  if (double t = seconds_since(start); t >= 30.0) problems << "took " << t << "s; ";
  return problems.str();
}

BigRational value_or_win(const Solution& s, const Position& p) {
  if (p.a + p.b >= s.n) return 1;
  return s.values.at(p);
}

std::string forced_toss_residuals() {
  std::ostringstream problems;
  const BigRational third(1, 3);
  for (int n = 2; n <= 10; ++n) {
    const Solution& s = solved(n);
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const BigRational r = value_or_win(s, {0, b, c}) - third -
                              2 * third * value_or_win(s, {1, b, c}) +
                              third * value_or_win(s, {1, c, b});
        if (r != 0) problems << "n=" << n << " b=" << b << " c=" << c << "; ";
      }
    }
  }
  return problems.str();
}

}  // namespace

int main() {
  report("first-player values", first_player_values);
  report("worked example n=3", worked_example);
  report("policy fixtures", policy_fixtures);
  report("threshold table n=20", table_one);
  report("method agreement n<=5", method_agreement);
  report("all-in lemma r<=30", all_in);
  report("count formulas n<=50", counts);
  report("needs consistency 12 vs 20", needs_consistency);
  report("equilibrium security n<=4", security);
  report("monte carlo n=3,6", monte_carlo);
  report("forced-toss residuals n<=10", forced_toss_residuals);
  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
