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

#ifndef RISKGAME_POLICY_HPP
#define RISKGAME_POLICY_HPP

#include <map>
#include <set>

#include "riskgame/exact.hpp"
#include "riskgame/game.hpp"

namespace riskgame {

using PolicyMap = std::map<Position, Action>;
using ValueMap = std::map<Position, BigRational>;

// Exact one-step values of both actions at a decision position, read off a
// value map that covers all alive positions.
struct ActionValues {
  BigRational if_continue;
  BigRational if_stop;
};

ActionValues action_values(const ValueMap& values, const Position& pos,
                           const GameParams& params);

// One equation per alive position when both players follow the same
// stationary policy:
//   a = 0:  P(0,b,c) = 1/2 (1 - P(0,c,b)) + 1/2 P(1,b,c)
//   continue: P(a,b,c) = 1/2 (1 - P(0,c,b)) + 1/2 P(a+1,b,c)
//   stop:     P(a,b,c) = 1 - P(0,c,a+b)
// Winning successors contribute the constant 1. Throws std::invalid_argument
// when the policy misses a decision position.
LinearSystem policy_equations(const GameParams& params, const PolicyMap& policy);

ValueMap evaluate_policy(const GameParams& params, const PolicyMap& policy);

// Positions visited with positive probability from (0,0,0), seen from the
// mover, when both sides follow policy.
std::set<Position> reachable_positions(const GameParams& params,
                                       const PolicyMap& policy);

// Converged optimal play for one target.
struct Solution {
  int n = 0;
  PolicyMap policy;       // every decision position
  ValueMap values;        // every alive position
  std::set<Position> ties;  // both actions have equal exact value; labeled Stop
  BigRational p_first;    // P(0,0,0)
  int sweeps = 0;         // interval sweeps until every label was decided
  int flips = 0;          // labels corrected by the exact verification
};

}  // namespace riskgame

#endif  // RISKGAME_POLICY_HPP
