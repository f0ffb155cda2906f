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

#include "riskgame/game.hpp"

#include <algorithm>

namespace riskgame {

GameParams::GameParams(int target) : n_(target) {
  if (target < 1) {
    throw std::invalid_argument("target must be at least 1, got " +
                                std::to_string(target));
  }
}

std::string to_string(const Position& pos) {
  return "(" + std::to_string(pos.a) + "," + std::to_string(pos.b) + "," +
         std::to_string(pos.c) + ")";
}

std::ostream& operator<<(std::ostream& os, const Position& pos) {
  return os << to_string(pos);
}

std::string to_string(Action action) {
  return action == Action::Continue ? "continue" : "stop";
}

std::ostream& operator<<(std::ostream& os, Action action) {
  return os << to_string(action);
}

bool is_alive(const Position& pos, const GameParams& params) {
  return pos.a >= 0 && pos.b >= 0 && pos.c >= 0 && pos.a + pos.b < params.n() &&
         pos.c < params.n();
}

bool is_new(const Position& pos) { return pos.b == 0 || pos.c == 0; }

Transition step(const Position& pos, Action action, std::optional<Coin> outcome,
                const GameParams& params) {
  if (!is_alive(pos, params)) {
    throw DeadPosition("position " + to_string(pos) + " is not alive for n=" +
                       std::to_string(params.n()));
  }
  const int n = params.n();
  Transition t;
  if (action == Action::Stop) {
    if (pos.a == 0) {
      throw IllegalAction("cannot stop at " + to_string(pos) +
                          " without open points");
    }
    t.outcome = Transition::Outcome::Banked;
    if (pos.a + pos.b >= n) {
      t.next = pos;
      t.terminal = Transition::Terminal::MoverWins;
      return t;
    }
    t.next = Position{0, pos.c, pos.a + pos.b};
    t.perspective_flipped = true;
    return t;
  }

  if (!outcome) {
    throw IllegalAction("continue at " + to_string(pos) +
                        " requires a coin outcome");
  }
  if (*outcome == Coin::Heads) {
    t.outcome = Transition::Outcome::Heads;
    if (pos.a + 1 + pos.b == n) {
      t.next = pos;
      t.terminal = Transition::Terminal::MoverWins;
    } else {
      t.next = Position{pos.a + 1, pos.b, pos.c};
    }
    return t;
  }
  t.outcome = Transition::Outcome::Tails;
  t.next = Position{0, pos.c, pos.b};
  t.perspective_flipped = true;
  return t;
}

std::vector<Position> new_positions(const GameParams& params) {
  const int n = params.n();
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(n * (3 * n - 1) / 2));
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      if (b != 0 && c != 0) continue;
      for (int a = 0; a + b < n; ++a) out.push_back({a, b, c});
    }
  }
  return out;
}

namespace {

std::vector<Position> by_descending_total(const GameParams& params,
                                          int min_open) {
  const int n = params.n();
  std::vector<Position> out;
  for (int total = n - 1; total >= 0; --total) {
    for (int a = total; a >= min_open; --a) {
      for (int c = 0; c < n; ++c) out.push_back({a, total - a, c});
    }
  }
  return out;
}

}  // namespace

std::vector<Position> decision_positions(const GameParams& params) {
  return by_descending_total(params, 1);
}

std::vector<Position> alive_positions(const GameParams& params) {
  return by_descending_total(params, 0);
}

NeedsView needs_view(const Position& pos, const GameParams& params) {
  if (!is_alive(pos, params)) {
    throw DeadPosition("position " + to_string(pos) + " is not alive for n=" +
                       std::to_string(params.n()));
  }
  return {pos.a, params.n() - pos.b, params.n() - pos.c};
}

Position from_needs(const NeedsView& view, const GameParams& params) {
  Position pos{view.a, params.n() - view.r, params.n() - view.s};
  if (!is_alive(pos, params)) {
    throw DeadPosition("needs view does not map to an alive position for n=" +
                       std::to_string(params.n()));
  }
  return pos;
}

}  // namespace riskgame
