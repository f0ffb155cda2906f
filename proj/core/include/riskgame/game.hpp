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

#ifndef RISKGAME_GAME_HPP
#define RISKGAME_GAME_HPP

// State model and rules of "Risk or Safety".
//
// A turn is a sequence of fair coin tosses. Heads adds an open point, tails
// forfeits all open points and passes the turn, and banking converts the open
// points into saved points and passes the turn. The first player to hold n
// points wins.
//
// Every position is seen from the player about to act: (a, b, c) is the
// mover's open points, the mover's saved points, and the opponent's saved
// points. When the turn passes the perspective flips, so the value of the
// successor relates to the value of the predecessor by p -> 1 - p.

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace riskgame {

class GameParams {
 public:
  // Throws std::invalid_argument when target < 1.
  explicit GameParams(int target);

  int n() const { return n_; }

  friend bool operator==(const GameParams&, const GameParams&) = default;

 private:
  int n_;
};

struct Position {
  int a = 0;  // open points of the mover
  int b = 0;  // saved points of the mover
  int c = 0;  // saved points of the opponent

  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& pos);
std::ostream& operator<<(std::ostream& os, const Position& pos);

enum class Action { Continue, Stop };
enum class Coin { Heads, Tails };

std::string to_string(Action action);
std::ostream& operator<<(std::ostream& os, Action action);

struct Transition {
  enum class Outcome { Heads, Tails, Banked };
  enum class Terminal { None, MoverWins };

  Outcome outcome = Outcome::Heads;
  // Successor seen from whoever moves next. Unchanged from the source
  // position when terminal == MoverWins.
  Position next;
  bool perspective_flipped = false;
  Terminal terminal = Terminal::None;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Points still needed by each side, counting saved points only. Two
// positions with equal views (under possibly different targets) have
// isomorphic futures.
struct NeedsView {
  int a = 0;  // open points
  int r = 0;  // mover needs n - b
  int s = 0;  // opponent needs n - c

  friend auto operator<=>(const NeedsView&, const NeedsView&) = default;
};

class IllegalAction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DeadPosition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A position is alive when nobody has won yet: a + b < n and c < n.
bool is_alive(const Position& pos, const GameParams& params);

// A decision is pending when the mover holds open points.
inline bool is_decision(const Position& pos) { return pos.a >= 1; }

// Positions where at least one player has nothing saved. Every other alive
// position reduces to a smaller target through its NeedsView.
bool is_new(const Position& pos);

// Applies one event to an alive position. Continue needs a coin outcome;
// Stop ignores it.
Transition step(const Position& pos, Action action, std::optional<Coin> outcome,
                const GameParams& params);

// The forced toss at a = 0, equivalent to Continue.
inline Transition toss(const Position& pos, Coin outcome,
                       const GameParams& params) {
  return step(pos, Action::Continue, outcome, params);
}

// (n/2)(3n - 1) positions ordered lexicographically by (b, c, a).
std::vector<Position> new_positions(const GameParams& params);

// (n - 1) n^2 / 2 positions with a >= 1, ordered by descending a + b, then
// descending a, then ascending c. Empty for n = 1.
std::vector<Position> decision_positions(const GameParams& params);

// Every alive position, in the same order as decision_positions with the
// a = 0 positions last inside each a + b group.
std::vector<Position> alive_positions(const GameParams& params);

NeedsView needs_view(const Position& pos, const GameParams& params);
Position from_needs(const NeedsView& view, const GameParams& params);

}  // namespace riskgame

#endif  // RISKGAME_GAME_HPP
