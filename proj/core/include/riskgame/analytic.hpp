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

#ifndef RISKGAME_ANALYTIC_HPP
#define RISKGAME_ANALYTIC_HPP

// Strategy enumeration over the new positions of one target.
//
// Targets are solved bottom-up: every position where both players have
// something saved reduces to a smaller target and is injected as a constant.
// What remains is a system over the (n/2)(3n - 1) new positions, one pure
// strategy at a time.
//
// The new positions split into blocks by the saved score k of the player who
// is ahead, {(a,0,k), (a,k,0)}. A block only depends on blocks with larger k
// and on reduced positions, so blocks are decided from k = n - 1 down to 0.
// Inside a block each player's decisions form a chain in the open points a;
// only the first stop on the chain is reachable, so a chain contributes one
// option per stopping point plus "never stop". Every combination of options is
// evaluated with an exact solve of the full new-position system. Decisions
// past the stopping point are settled afterwards by local comparison, deepest
// first. The combination that survives every one-step deviation is kept.

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "riskgame/exact.hpp"
#include "riskgame/game.hpp"
#include "riskgame/policy.hpp"

namespace riskgame {

class MissingKnownValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One pure stationary strategy over the decisions among the new positions.
struct StrategyAssignment {
  int n = 0;
  PolicyMap decisions;
};

// Values of smaller targets, keyed by needs so they apply at any target.
using KnownValues = std::map<NeedsView, BigRational>;

// Decision positions among the new positions, in new_positions order.
std::vector<Position> strategy_positions(const GameParams& params);

// Needs-keyed values of every alive position of a solved target.
KnownValues known_from(const Solution& smaller);

// One row per new position. Reduced positions are replaced by constants from
// known; throws MissingKnownValue when one is absent and std::invalid_argument
// when the strategy misses a decision.
LinearSystem build_equations(const StrategyAssignment& strategy,
                             const KnownValues& known);

// Exact value of every new position under symmetric play of strategy.
ValueMap evaluate_strategy(const StrategyAssignment& strategy,
                           const KnownValues& known);

struct StrategyReport {
  StrategyAssignment optimal;
  ValueMap values;  // new positions
  std::size_t strategies_compared = 0;
  std::string strategies_total_note;
  std::set<Position> ties;
  Solution solution;  // full policy and values, reduced positions included
};

struct AnalyticOptions {
  // Upper bound on exact strategy evaluations across all targets 1..n.
  std::size_t budget = 100000;
};

// Throws BudgetExceeded when the enumeration needs more evaluations than the
// budget allows.
StrategyReport solve_analytic(const GameParams& params,
                              const AnalyticOptions& options = {});

}  // namespace riskgame

#endif  // RISKGAME_ANALYTIC_HPP
