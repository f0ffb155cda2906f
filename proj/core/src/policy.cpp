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

#include "riskgame/policy.hpp"

#include <deque>

namespace riskgame {

namespace {

const BigRational kHalf(1, 2);

const BigRational& lookup(const ValueMap& values, const Position& pos) {
  auto it = values.find(pos);
  if (it == values.end()) {
    throw std::invalid_argument("value map lacks position " + to_string(pos));
  }
  return it->second;
}

}  // namespace

ActionValues action_values(const ValueMap& values, const Position& pos,
                           const GameParams& params) {
  if (!is_alive(pos, params)) {
    throw DeadPosition("position " + to_string(pos) + " is not alive");
  }
  if (pos.a < 1) {
    throw IllegalAction("no decision at " + to_string(pos));
  }
  const int n = params.n();
  BigRational tails = 1 - lookup(values, {0, pos.c, pos.b});
  BigRational heads = pos.a + 1 + pos.b == n
                          ? BigRational(1)
                          : lookup(values, {pos.a + 1, pos.b, pos.c});
  ActionValues out;
  out.if_continue = kHalf * tails + kHalf * heads;
  out.if_stop = 1 - lookup(values, {0, pos.c, pos.a + pos.b});
  return out;
}

LinearSystem policy_equations(const GameParams& params, const PolicyMap& policy) {
  const int n = params.n();
  auto positions = alive_positions(params);
  std::map<Position, std::size_t> index;
  for (std::size_t i = 0; i < positions.size(); ++i) index.emplace(positions[i], i);

  LinearSystem system(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Position& p = positions[i];
    system.add(i, i, 1);
    Action action = Action::Continue;
    if (p.a >= 1) {
      auto it = policy.find(p);
      if (it == policy.end()) {
        throw std::invalid_argument("policy lacks decision at " + to_string(p));
      }
      action = it->second;
    }
    if (action == Action::Stop) {
      system.add(i, index.at({0, p.c, p.a + p.b}), 1);
      system.rhs(i) = 1;
      continue;
    }
    // 1/2 (1 - P(0,c,b)) + 1/2 P(a+1,b,c)
    system.add(i, index.at({0, p.c, p.b}), kHalf);
    BigRational rhs = kHalf;
    if (p.a + 1 + p.b == n) {
      rhs += kHalf;
    } else {
      system.add(i, index.at({p.a + 1, p.b, p.c}), -kHalf);
    }
    system.rhs(i) = rhs;
  }
  system.set_labels(std::move(positions));
  return system;
}

ValueMap evaluate_policy(const GameParams& params, const PolicyMap& policy) {
  return solve_exact_labeled(policy_equations(params, policy));
}

std::set<Position> reachable_positions(const GameParams& params,
                                       const PolicyMap& policy) {
  std::set<Position> seen{{0, 0, 0}};
  std::deque<Position> queue{{0, 0, 0}};
  auto visit = [&](const Transition& t) {
    if (t.terminal == Transition::Terminal::MoverWins) return;
    if (seen.insert(t.next).second) queue.push_back(t.next);
  };
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    Action action = Action::Continue;
    if (p.a >= 1) {
      auto it = policy.find(p);
      if (it == policy.end()) {
        throw std::invalid_argument("policy lacks decision at " + to_string(p));
      }
      action = it->second;
    }
    if (action == Action::Stop) {
      visit(step(p, Action::Stop, std::nullopt, params));
    } else {
      visit(step(p, Action::Continue, Coin::Heads, params));
      visit(step(p, Action::Continue, Coin::Tails, params));
    }
  }
  return seen;
}

}  // namespace riskgame
