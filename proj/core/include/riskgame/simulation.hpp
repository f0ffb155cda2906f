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

#ifndef RISKGAME_SIMULATION_HPP
#define RISKGAME_SIMULATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "riskgame/exact.hpp"
#include "riskgame/policy.hpp"

namespace riskgame {

// Possibly different policies for the player who moves first and the one who
// moves second. Each must cover every decision position.
struct PolicyPair {
  int n = 0;
  PolicyMap first;
  PolicyMap second;
};

PolicyPair symmetric_pair(const Solution& solution);

// Probability that the first mover wins from the opening, computed exactly on
// the absorbing chain over (mover, first's saved, second's saved, open).
BigRational exact_pair_value(const PolicyPair& pair);

struct TraceStep {
  int player = 0;  // 0 moves first, 1 moves second
  Position position;
  std::optional<Action> action;  // empty for the forced toss at a = 0
  std::optional<Coin> outcome;   // empty when banking
};

struct GameRecord {
  int winner = 0;
  std::vector<TraceStep> trace;
};

using CoinSource = std::function<Coin()>;

// Seed of game number game_index within a run seeded with seed: the
// SplitMix64 finalizer applied to seed + (game_index + 1) * 0x9E3779B97F4A7C15.
std::uint64_t game_seed(std::uint64_t seed, std::uint64_t game_index);

// Fair coin from std::mt19937_64: heads when the top bit of the next output
// is set. Bit-identical on every conforming platform.
class SeededCoins {
 public:
  explicit SeededCoins(std::uint64_t seed) : engine_(seed) {}
  Coin operator()() { return (engine_() >> 63) != 0 ? Coin::Heads : Coin::Tails; }

 private:
  std::mt19937_64 engine_;
};

GameRecord play_game(const PolicyPair& pair, const CoinSource& coins);
// Plays game 0 of a run seeded with seed.
GameRecord play_game(const PolicyPair& pair, std::uint64_t seed);

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t wins_first = 0;
  double estimate = 0.0;   // wins_first / trials
  double std_error = 0.0;  // sqrt(estimate (1 - estimate) / trials)
  std::uint64_t seed = 0;
};

// Game i uses SeededCoins(game_seed(seed, i)), so the report does not depend
// on threads. threads == 0 picks the hardware concurrency.
TrialReport estimate(const PolicyPair& pair, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads = 0);

}  // namespace riskgame

#endif  // RISKGAME_SIMULATION_HPP
