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

#include "riskgame/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace riskgame {

namespace {

void require_total(const PolicyMap& policy, const GameParams& params,
                   const char* who) {
  for (const auto& p : decision_positions(params)) {
    if (!policy.count(p)) {
      throw std::invalid_argument(std::string(who) + " policy lacks decision at " +
                                  to_string(p));
    }
  }
}

// Dense decision table, (a * n + b) * n + c -> stop?
std::vector<char> stop_table(const PolicyMap& policy, int n) {
  std::vector<char> table(static_cast<std::size_t>(n) * n * n, 0);
  for (const auto& [p, action] : policy) {
    if (p.a >= 1 && p.a + p.b < n && p.c < n) {
      table[(static_cast<std::size_t>(p.a) * n + p.b) * n + p.c] =
          action == Action::Stop;
    }
  }
  return table;
}

}  // namespace

PolicyPair symmetric_pair(const Solution& solution) {
  return {solution.n, solution.policy, solution.policy};
}

BigRational exact_pair_value(const PolicyPair& pair) {
  GameParams params(pair.n);
  const int n = params.n();
  require_total(pair.first, params, "first");
  require_total(pair.second, params, "second");

  // State (mover, saved of first, saved of second, open).
  auto index = [n](int mover, int f, int g, int a) {
    return ((static_cast<std::size_t>(mover) * n + f) * n + g) * n + a;
  };
  const std::size_t size = 2 * static_cast<std::size_t>(n) * n * n;
  LinearSystem system(size);
  const BigRational half(1, 2);

  for (int mover = 0; mover < 2; ++mover) {
    const PolicyMap& policy = mover == 0 ? pair.first : pair.second;
    const BigRational win = mover == 0 ? 1 : 0;
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        const int own = mover == 0 ? f : g;
        const int other = mover == 0 ? g : f;
        for (int a = 0; a < n; ++a) {
          const std::size_t row = index(mover, f, g, a);
          system.add(row, row, 1);
          if (a + own >= n) continue;  // unused slot: x = 0
          Action action = a == 0 ? Action::Continue : policy.at({a, own, other});
          if (action == Action::Stop) {
            const int nf = mover == 0 ? f + a : f;
            const int ng = mover == 0 ? g : g + a;
            system.add(row, index(1 - mover, nf, ng, 0), -1);
            continue;
          }
          BigRational rhs = 0;
          if (a + 1 + own == n) {
            rhs += half * win;
          } else {
            system.add(row, index(mover, f, g, a + 1), -half);
          }
          system.add(row, index(1 - mover, f, g, 0), -half);
          system.rhs(row) = rhs;
        }
      }
    }
  }
  return solve_exact(system)[index(0, 0, 0, 0)];
}

std::uint64_t game_seed(std::uint64_t seed, std::uint64_t game_index) {
  std::uint64_t z = seed + (game_index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GameRecord play_game(const PolicyPair& pair, const CoinSource& coins) {
  GameParams params(pair.n);
  GameRecord record;
  int player = 0;
  Position pos{0, 0, 0};
  while (true) {
    const PolicyMap& policy = player == 0 ? pair.first : pair.second;
    TraceStep entry{player, pos, std::nullopt, std::nullopt};
    Transition t;
    if (pos.a >= 1 && policy.at(pos) == Action::Stop) {
      entry.action = Action::Stop;
      t = step(pos, Action::Stop, std::nullopt, params);
    } else {
      if (pos.a >= 1) entry.action = Action::Continue;
      entry.outcome = coins();
      t = step(pos, Action::Continue, entry.outcome, params);
    }
    record.trace.push_back(entry);
    if (t.terminal == Transition::Terminal::MoverWins) {
      record.winner = player;
      return record;
    }
    if (t.perspective_flipped) player = 1 - player;
    pos = t.next;
  }
}

GameRecord play_game(const PolicyPair& pair, std::uint64_t seed) {
  SeededCoins coins(game_seed(seed, 0));
  return play_game(pair, CoinSource(std::ref(coins)));
}

TrialReport estimate(const PolicyPair& pair, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  GameParams params(pair.n);
  const int n = params.n();
  require_total(pair.first, params, "first");
  require_total(pair.second, params, "second");
  const std::vector<char> tables[2] = {stop_table(pair.first, n),
                                       stop_table(pair.second, n)};

  // Same rules as play_game, without the trace.
  auto first_wins = [&](std::uint64_t game) {
    SeededCoins coins(game_seed(seed, game));
    int player = 0;
    int a = 0;
    int saved[2] = {0, 0};
    while (true) {
      const int own = saved[player];
      const int other = saved[1 - player];
      if (a >= 1 && tables[player][(static_cast<std::size_t>(a) * n + own) * n + other]) {
        saved[player] += a;
        a = 0;
        player = 1 - player;
        continue;
      }
      if (coins() == Coin::Heads) {
        if (++a + own == n) return player == 0;
      } else {
        a = 0;
        player = 1 - player;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, trials));
  std::vector<std::uint64_t> wins(threads, 0);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(trials, begin + chunk);
      for (std::uint64_t g = begin; g < end; ++g) wins[w] += first_wins(g);
    });
  }
  for (auto& worker : workers) worker.join();

  TrialReport report;
  report.trials = trials;
  report.seed = seed;
  for (auto w : wins) report.wins_first += w;
  report.estimate = static_cast<double>(report.wins_first) / static_cast<double>(trials);
  report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) /
                               static_cast<double>(trials));
  return report;
}

}  // namespace riskgame
