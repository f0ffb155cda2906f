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

#include "riskgame/interval.hpp"

#include <algorithm>

namespace riskgame {

IterationState::IterationState(const GameParams& params, double epsilon)
    : params_(params),
      epsilon_(epsilon),
      order_(decision_positions(params)),
      cells_(static_cast<std::size_t>(params.n()) * params.n() * params.n()),
      undecided_(order_.size()) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
}

std::size_t IterationState::slot(const Position& pos) const {
  const int n = params_.n();
  if (pos.a < 1 || pos.b < 0 || pos.c < 0 || pos.c >= n || pos.a + pos.b >= n) {
    throw std::out_of_range("no interval cell for " + to_string(pos));
  }
  return (static_cast<std::size_t>(pos.a) * n + pos.b) * n + pos.c;
}

IntervalCell IterationState::cell(const Position& pos) const {
  if (pos.a + pos.b >= params_.n()) return {1.0, 1.0, Label::Unknown};
  return cells_[slot(pos)];
}

IntervalCell& IterationState::mutable_cell(const Position& pos) {
  return cells_[slot(pos)];
}

std::vector<Position> IterationState::undecided() const {
  std::vector<Position> out;
  for (const auto& p : order_) {
    if (cells_[slot(p)].s == Label::Unknown) out.push_back(p);
  }
  return out;
}

Bounds continue_value_bounds(const IterationState& state, const Position& pos) {
  const IntervalCell rival = state.cell({1, pos.c, pos.b});
  const IntervalCell own = state.cell({1, pos.b, pos.c});
  const IntervalCell heads = state.cell({pos.a + 1, pos.b, pos.c});
  return {
      1.0 / 3 - rival.p_max / 3 + own.p_min / 6 + heads.p_min / 2,
      1.0 / 3 - rival.p_min / 3 + own.p_max / 6 + heads.p_max / 2,
  };
}

Bounds stop_value_bounds(const IterationState& state, const Position& pos) {
  const int banked = pos.a + pos.b;
  const IntervalCell rival = state.cell({1, pos.c, banked});
  const IntervalCell own = state.cell({1, banked, pos.c});
  return {
      2.0 / 3 - 2 * rival.p_max / 3 + own.p_min / 3,
      2.0 / 3 - 2 * rival.p_min / 3 + own.p_max / 3,
  };
}

void sweep(IterationState& state) {
  for (const auto& pos : state.order_) {
    const Bounds go_on = continue_value_bounds(state, pos);
    const Bounds bank = stop_value_bounds(state, pos);
    IntervalCell& cell = state.mutable_cell(pos);

    if (cell.s == Label::Unknown) {
      if (go_on.low > bank.high + state.epsilon_) {
        cell.s = Label::Continue;
      } else if (bank.low > go_on.high + state.epsilon_) {
        cell.s = Label::Stop;
      }
      if (cell.s != Label::Unknown) --state.undecided_;
    }

    Bounds next;
    switch (cell.s) {
      case Label::Unknown:
        next = {std::min(go_on.low, bank.low), std::max(go_on.high, bank.high)};
        break;
      case Label::Continue:
        next = go_on;
        break;
      case Label::Stop:
        next = bank;
        break;
    }
    // Brackets only ever shrink; rounding must not widen them.
    cell.p_min = std::max(cell.p_min, next.low);
    cell.p_max = std::min(cell.p_max, next.high);
    if (cell.p_max < cell.p_min) cell.p_max = cell.p_min;
  }
  ++state.sweeps_;
}

Solution solve_iterative(const GameParams& params, const IterativeOptions& options) {
  if (params.n() < 2) {
    throw std::invalid_argument("iterative solve needs n >= 2; n=1 has no decisions");
  }
  IterationState state(params, options.epsilon);
  while (state.undecided_count() > 0) {
    if (state.sweep_count() >= options.max_sweeps) {
      auto open = state.undecided();
      std::vector<Bounds> go_on, bank;
      for (const auto& p : open) {
        go_on.push_back(continue_value_bounds(state, p));
        bank.push_back(stop_value_bounds(state, p));
      }
      const std::string what = "interval iteration left " + std::to_string(open.size()) +
                               " positions undecided after " +
                               std::to_string(state.sweep_count()) + " sweeps";
      throw NotConverged(what, std::move(open), std::move(go_on), std::move(bank));
    }
    sweep(state);
    if (options.on_sweep) options.on_sweep(state);
  }

  Solution solution;
  solution.n = params.n();
  solution.sweeps = state.sweep_count();
  for (const auto& p : state.order()) {
    solution.policy[p] =
        state.cell(p).s == Label::Continue ? Action::Continue : Action::Stop;
  }

  // Each correction round either changes nothing or moves labels to a
  // strictly better exact action; a handful of rounds is already unusual.
  const int max_rounds = static_cast<int>(state.order().size()) + 1;
  for (int round = 0;; ++round) {
    if (round == max_rounds) {
      throw NotConverged("exact label correction did not settle", {}, {}, {});
    }
    solution.values = evaluate_policy(params, solution.policy);
    solution.ties.clear();
    bool changed = false;
    for (auto& [p, action] : solution.policy) {
      const ActionValues q = action_values(solution.values, p, params);
      if (q.if_continue == q.if_stop) {
        solution.ties.insert(p);
        if (action != Action::Stop) {
          action = Action::Stop;
          changed = true;
        }
      } else {
        Action better = q.if_continue > q.if_stop ? Action::Continue : Action::Stop;
        if (action != better) {
          action = better;
          ++solution.flips;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  solution.p_first = solution.values.at({0, 0, 0});
  return solution;
}

}  // namespace riskgame
