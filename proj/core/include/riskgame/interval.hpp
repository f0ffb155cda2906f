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

#ifndef RISKGAME_INTERVAL_HPP
#define RISKGAME_INTERVAL_HPP

// Interval value iteration.
//
// Eliminating the forced toss at a = 0,
//   P(0,b,c) = 1/3 + 2/3 P(1,b,c) - 1/3 P(1,c,b),
// leaves equations over the decision positions only:
//   continue: 1/3 - 1/3 P(1,c,b) + 1/6 P(1,b,c) + 1/2 P(a+1,b,c)
//   stop:     2/3 - 2/3 P(1,c,a+b) + 1/3 P(1,a+b,c)
// Each decision position carries a [p_min, p_max] bracket and a label. A label
// is fixed once one action's lower bound beats the other's upper bound by more
// than epsilon. Brackets are swept in binary64; the labels are then checked
// against exact rational values and corrected if needed.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "riskgame/game.hpp"
#include "riskgame/policy.hpp"

namespace riskgame {

enum class Label { Unknown, Continue, Stop };

struct IntervalCell {
  double p_min = 0.0;
  double p_max = 1.0;
  Label s = Label::Unknown;
};

struct Bounds {
  double low = 0.0;
  double high = 0.0;
};

class IterationState {
 public:
  IterationState(const GameParams& params, double epsilon);

  const GameParams& params() const { return params_; }
  double epsilon() const { return epsilon_; }
  int sweep_count() const { return sweeps_; }
  std::size_t undecided_count() const { return undecided_; }

  // Cells in sweep order (decision_positions order).
  const std::vector<Position>& order() const { return order_; }

  // Positions where the mover already holds n points read as [1, 1].
  IntervalCell cell(const Position& pos) const;

  std::vector<Position> undecided() const;

 private:
  friend void sweep(IterationState& state);

  IntervalCell& mutable_cell(const Position& pos);
  std::size_t slot(const Position& pos) const;

  GameParams params_;
  double epsilon_;
  std::vector<Position> order_;
  std::vector<IntervalCell> cells_;  // dense a x b x c grid
  int sweeps_ = 0;
  std::size_t undecided_ = 0;
};

Bounds continue_value_bounds(const IterationState& state, const Position& pos);
Bounds stop_value_bounds(const IterationState& state, const Position& pos);

// One Gauss-Seidel pass over order(); fresh bounds are used immediately.
void sweep(IterationState& state);

class NotConverged : public std::runtime_error {
 public:
  NotConverged(const std::string& what, std::vector<Position> undecided,
               std::vector<Bounds> continue_bounds, std::vector<Bounds> stop_bounds)
      : std::runtime_error(what),
        undecided_(std::move(undecided)),
        continue_bounds_(std::move(continue_bounds)),
        stop_bounds_(std::move(stop_bounds)) {}

  // Still-unknown positions with both action brackets; overlapping brackets
  // that have stopped shrinking point at an exact tie.
  const std::vector<Position>& undecided() const { return undecided_; }
  const std::vector<Bounds>& continue_bounds() const { return continue_bounds_; }
  const std::vector<Bounds>& stop_bounds() const { return stop_bounds_; }

 private:
  std::vector<Position> undecided_;
  std::vector<Bounds> continue_bounds_;
  std::vector<Bounds> stop_bounds_;
};

struct IterativeOptions {
  double epsilon = 1e-12;
  int max_sweeps = 10000;
  // Called after every sweep, e.g. to check brackets against known values.
  std::function<void(const IterationState&)> on_sweep;
};

// Sweeps until every label is decided, then solves the induced policy
// exactly. Labels whose exact one-step value loses to the other action are
// flipped and the exact solve repeats. Exact ties are labeled Stop and listed
// in Solution::ties. Throws NotConverged after max_sweeps, or when exact
// correction does not settle.
Solution solve_iterative(const GameParams& params, const IterativeOptions& options = {});

}  // namespace riskgame

#endif  // RISKGAME_INTERVAL_HPP
