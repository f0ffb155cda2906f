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

#include "riskgame/analytic.hpp"

#include <optional>

namespace riskgame {

namespace {

const BigRational kHalf(1, 2);

Position shift_down(const Position& p) { return {p.a, p.b - 1, p.c - 1}; }

// Value lookup during block resolution: wins, new positions from the current
// solve, reduced positions from the smaller targets.
class ValueSource {
 public:
  ValueSource(const GameParams& params, const ValueMap& values,
              const KnownValues& known)
      : params_(params), values_(values), known_(known) {}

  BigRational operator()(const Position& p) const {
    if (p.a + p.b >= params_.n()) return 1;
    if (is_new(p)) return values_.at(p);
    auto it = known_.find(needs_view(p, params_));
    if (it == known_.end()) {
      throw MissingKnownValue("no known value for " + to_string(p));
    }
    return it->second;
  }

 private:
  const GameParams& params_;
  const ValueMap& values_;
  const KnownValues& known_;
};

struct ChainCheck {
  bool optimal = true;
  PolicyMap decisions;  // on-path and settled tail
  std::set<Position> ties;
};

// chain[i] is the position with i + 1 open points; stop_at is the first
// stopping point, chain.size() + 1 meaning never stop.
ChainCheck check_chain(const std::vector<Position>& chain, std::size_t stop_at,
                       const ValueSource& value) {
  ChainCheck out;
  const std::size_t length = chain.size();
  // Settle the unreachable tail first, deepest position first.
  std::optional<BigRational> next_value;  // value at a + 1 when a + 1 is in the tail
  for (std::size_t a = length; a > stop_at; --a) {
    const Position& p = chain[a - 1];
    BigRational heads = a == length ? BigRational(1) : *next_value;
    BigRational go_on = kHalf * (1 - value({0, p.c, p.b})) + kHalf * heads;
    BigRational bank = 1 - value({0, p.c, p.a + p.b});
    if (bank >= go_on) {
      out.decisions[p] = Action::Stop;
      if (bank == go_on) out.ties.insert(p);
      next_value = bank;
    } else {
      out.decisions[p] = Action::Continue;
      next_value = go_on;
    }
  }
  // On-path decisions must survive a one-step deviation.
  for (std::size_t a = 1; a <= std::min(stop_at, length); ++a) {
    const Position& p = chain[a - 1];
    BigRational heads = a == length    ? BigRational(1)
                        : a == stop_at ? *next_value
                                       : value(chain[a]);
    BigRational go_on = kHalf * (1 - value({0, p.c, p.b})) + kHalf * heads;
    BigRational bank = 1 - value({0, p.c, p.a + p.b});
    Action chosen = a == stop_at ? Action::Stop : Action::Continue;
    out.decisions[p] = chosen;
    if (go_on == bank) out.ties.insert(p);
    if (chosen == Action::Stop ? bank < go_on : go_on < bank) out.optimal = false;
  }
  return out;
}

void assign_chain(StrategyAssignment& strategy, const std::vector<Position>& chain,
                  std::size_t stop_at) {
  for (std::size_t a = 1; a <= chain.size(); ++a) {
    strategy.decisions[chain[a - 1]] =
        a == stop_at ? Action::Stop : Action::Continue;
  }
}

StrategyReport solve_target(const GameParams& params, const KnownValues& known,
                            const Solution* smaller, std::size_t& used,
                            std::size_t budget) {
  const int n = params.n();
  StrategyAssignment strategy{n, {}};
  for (const auto& p : strategy_positions(params)) {
    strategy.decisions[p] = Action::Continue;
  }

  std::size_t compared = 0;
  std::set<Position> ties;
  auto evaluate = [&]() {
    if (used >= budget) {
      throw BudgetExceeded("analytic enumeration exceeded the budget of " +
                           std::to_string(budget) + " strategy evaluations at n=" +
                           std::to_string(n));
    }
    ++used;
    ++compared;
    return evaluate_strategy(strategy, known);
  };

  for (int k = n - 1; k >= 0; --k) {
    std::vector<std::vector<Position>> chains(1);
    for (int a = 1; a < n; ++a) chains[0].push_back({a, 0, k});
    if (k > 0) {
      std::vector<Position> ahead;
      for (int a = 1; a + k < n; ++a) ahead.push_back({a, k, 0});
      if (!ahead.empty()) chains.push_back(std::move(ahead));
    }

    // Odometer over stopping points, last chain fastest. Options run from
    // 1 to length + 1 so earlier stops (ties keep Stop) come first.
    std::vector<std::size_t> stop_at(chains.size(), 1);
    auto advance = [&]() {
      for (std::size_t i = chains.size(); i-- > 0;) {
        if (stop_at[i] <= chains[i].size()) {
          ++stop_at[i];
          return true;
        }
        stop_at[i] = 1;
      }
      return false;
    };
    std::optional<ChainCheck> chosen;
    do {
      for (std::size_t i = 0; i < chains.size(); ++i) {
        assign_chain(strategy, chains[i], stop_at[i]);
      }
      ValueMap values = evaluate();
      ValueSource value(params, values, known);
      ChainCheck combined;
      for (std::size_t i = 0; i < chains.size(); ++i) {
        ChainCheck check = check_chain(chains[i], stop_at[i], value);
        combined.optimal = combined.optimal && check.optimal;
        combined.decisions.merge(check.decisions);
        combined.ties.merge(check.ties);
      }
      if (combined.optimal && !chosen) chosen = std::move(combined);
    } while (advance());
    if (!chosen) {
      throw std::logic_error("no equilibrium among block strategies at n=" +
                             std::to_string(n) + ", k=" + std::to_string(k));
    }
    for (const auto& [p, action] : chosen->decisions) strategy.decisions[p] = action;
    ties.merge(chosen->ties);
  }

  StrategyReport report;
  report.values = evaluate_strategy(strategy, known);
  report.optimal = strategy;
  report.strategies_compared = compared;
  report.ties = ties;
  report.strategies_total_note =
      std::to_string(strategy.decisions.size()) +
      " decisions among new positions (2^" + std::to_string(strategy.decisions.size()) +
      " pure strategies); positions with both scores positive fixed from n=" +
      std::to_string(n - 1) + "; " + std::to_string(compared) +
      " strategies evaluated";

  Solution& s = report.solution;
  s.n = n;
  for (const auto& p : alive_positions(params)) {
    if (is_new(p)) {
      s.values[p] = report.values.at(p);
      if (p.a >= 1) s.policy[p] = strategy.decisions.at(p);
    } else {
      s.values[p] = smaller->values.at(shift_down(p));
      if (p.a >= 1) s.policy[p] = smaller->policy.at(shift_down(p));
      if (smaller->ties.count(shift_down(p))) s.ties.insert(p);
    }
  }
  s.ties.insert(ties.begin(), ties.end());
  s.p_first = s.values.at({0, 0, 0});
  return report;
}

}  // namespace

std::vector<Position> strategy_positions(const GameParams& params) {
  std::vector<Position> out;
  for (const auto& p : new_positions(params)) {
    if (p.a >= 1) out.push_back(p);
  }
  return out;
}

KnownValues known_from(const Solution& smaller) {
  GameParams params(smaller.n);
  KnownValues out;
  for (const auto& [p, v] : smaller.values) out.emplace(needs_view(p, params), v);
  return out;
}

LinearSystem build_equations(const StrategyAssignment& strategy,
                             const KnownValues& known) {
  GameParams params(strategy.n);
  const int n = params.n();
  auto positions = new_positions(params);
  std::map<Position, std::size_t> index;
  for (std::size_t i = 0; i < positions.size(); ++i) index.emplace(positions[i], i);

  LinearSystem system(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Position& p = positions[i];
    BigRational rhs = 0;
    // Moves weight * P(q) from the right-hand side of P_i = ... into the row.
    auto term = [&](const Position& q, const BigRational& weight) {
      if (q.a + q.b >= n) {
        rhs += weight;
      } else if (is_new(q)) {
        system.add(i, index.at(q), -weight);
      } else {
        auto it = known.find(needs_view(q, params));
        if (it == known.end()) {
          throw MissingKnownValue("no known value for " + to_string(q) +
                                  " at n=" + std::to_string(n));
        }
        rhs += weight * it->second;
      }
    };

    system.add(i, i, 1);
    Action action = Action::Continue;
    if (p.a >= 1) {
      auto it = strategy.decisions.find(p);
      if (it == strategy.decisions.end()) {
        throw std::invalid_argument("strategy lacks decision at " + to_string(p));
      }
      action = it->second;
    }
    if (action == Action::Stop) {
      rhs += 1;
      term({0, p.c, p.a + p.b}, -1);
    } else {
      rhs += kHalf;
      term({0, p.c, p.b}, -kHalf);
      term({p.a + 1, p.b, p.c}, kHalf);
    }
    system.rhs(i) = rhs;
  }
  system.set_labels(std::move(positions));
  return system;
}

ValueMap evaluate_strategy(const StrategyAssignment& strategy,
                           const KnownValues& known) {
  return solve_exact_labeled(build_equations(strategy, known));
}

StrategyReport solve_analytic(const GameParams& params,
                              const AnalyticOptions& options) {
  std::size_t used = 0;
  std::optional<Solution> smaller;
  StrategyReport report;
  for (int m = 1; m <= params.n(); ++m) {
    KnownValues known = smaller ? known_from(*smaller) : KnownValues{};
    report = solve_target(GameParams(m), known, smaller ? &*smaller : nullptr,
                          used, options.budget);
    smaller = report.solution;
  }
  return report;
}

}  // namespace riskgame
