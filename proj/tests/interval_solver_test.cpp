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


#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "oracle/bellman.hpp"
#include "riskgame/analytic.hpp"
#include "riskgame/interval.hpp"

namespace riskgame {
namespace {

// P(0,0,0) per target. The entries above n = 6 were computed once, checked
// against the Bellman oracle (FrozenValuesMatchTheOracle) and then frozen.
const std::map<int, const char*> kFirstMoverValues = {
    {2, "4/7"},
    {3, "6/11"},
    {4, "2236/4165"},
    {5, "1026/1925"},
    {6, "275848876/521145625"},
    {7, "649346842/1231278125"},
    {8, "61550866190068/117192622421875"},
    {9, "2737872156886/5225432428125"},
    {10, "5556238701119487884/10634368774326171875"},
    {11, "33857036312840796476194/64913928515324560546875"},
    {12, "3393041394611453189295265268/6519012951936493553466796875"},
    {13, "218370486707916654640780231642/420117998909827688127861328125"},
    {14, "112630244896738642814653528498087299988/217038092253876925088545128021240234375"},
    {15, "14364898791782224577113184680141626682/27711032758513212360715995025634765625"},
    {16,
     "1599710761252635467097849938052769718961535662524/"
     "3090007892803332518177914010771390705108642578125"},
    {17,
     "1271934201995087824531562911568806911954931581879270794/"
     "2459066905905289914478405966393431096797847747802734375"},
    {18,
     "28247088896509526684833556406803399555218653423253279570310576/"
     "54670177377720097529492873547468576365952718884944915771484375"},
    {19,
     "669663748187798960299370649019840271261510564439147472414465579166/"
     "1297062327956481751434290613853888919555135964767181873321533203125"},
    {20,
     "66496512444936569744985774803016169284564753386698071451174729031677100468/"
     "128914547048523848841946633205623295436534982031301567021310329437255859375"},
};

const Solution& solved(int n) {
  static std::map<int, Solution> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, solve_iterative(GameParams(n))).first;
  return it->second;
}

BigRational value_or_win(const Solution& s, const Position& p) {
  if (p.a + p.b >= s.n) return 1;
  return s.values.at(p);
}

TEST(IterationState, Initialization) {
  const IterationState state(GameParams(4), 1e-12);
  EXPECT_EQ(state.order(), decision_positions(GameParams(4)));
  EXPECT_EQ(state.sweep_count(), 0);
  EXPECT_EQ(state.undecided_count(), decision_positions(GameParams(4)).size());
  for (const auto& p : state.order()) {
    const IntervalCell cell = state.cell(p);
    EXPECT_EQ(cell.p_min, 0.0);
    EXPECT_EQ(cell.p_max, 1.0);
    EXPECT_EQ(cell.s, Label::Unknown);
  }
}

TEST(IterationState, BoundaryCellsAreCertainWins) {
  for (int n = 2; n <= 6; ++n) {
    IterationState state(GameParams(n), 1e-12);
    for (int round = 0; round < 3; ++round) {
      for (int c = 0; c < n; ++c) {
        const IntervalCell cell = state.cell({1, n - 1, c});
        EXPECT_EQ(cell.p_min, 1.0);
        EXPECT_EQ(cell.p_max, 1.0);
      }
      sweep(state);
    }
  }
}

TEST(ValueBounds, AtInitialization) {
  const IterationState state(GameParams(4), 1e-12);
  // One more heads wins: 1/3 - 1/3 * 1 + 1/6 * 0 + 1/2 * 1.
  const Bounds near_win = continue_value_bounds(state, {3, 0, 1});
  EXPECT_DOUBLE_EQ(near_win.low, 0.5);
  const Bounds bank = stop_value_bounds(state, {1, 0, 0});
  EXPECT_DOUBLE_EQ(bank.low, 0.0);
  EXPECT_DOUBLE_EQ(bank.high, 1.0);
}

// Hand execution of the first sweep for n = 2, cells (1,0,0) then (1,0,1):
//   (1,0,0) continue [1/3 - 1/3 + 0 + 1/2, 1/3 + 1/6 + 1/2] = [1/2, 1]
//           stop     [2/3 - 2/3 + 1/3, 2/3 + 1/3]           = [1/3, 1]
//           overlap, so the cell becomes [min lows, max highs] = [1/3, 1].
//   (1,0,1) continue [1/2 + 1/6 * 0, 1/2 + 1/6 * 1]          = [1/2, 2/3]
//           stop     2/3 - 2/3 + 1/3                         = 1/3 exactly
//           continue wins: label Continue with bounds [1/2, 2/3].
TEST(Sweep, FirstSweepForTargetTwo) {
  IterationState state(GameParams(2), 1e-12);
  sweep(state);
  EXPECT_EQ(state.sweep_count(), 1);
  const IntervalCell first = state.cell({1, 0, 0});
  EXPECT_EQ(first.s, Label::Unknown);
  EXPECT_DOUBLE_EQ(first.p_min, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(first.p_max, 1.0);
  const IntervalCell second = state.cell({1, 0, 1});
  EXPECT_EQ(second.s, Label::Continue);
  EXPECT_DOUBLE_EQ(second.p_min, 0.5);
  EXPECT_DOUBLE_EQ(second.p_max, 2.0 / 3.0);
  EXPECT_EQ(state.undecided_count(), 1u);
  EXPECT_EQ(state.undecided(), (std::vector<Position>{{1, 0, 0}}));
}

TEST(Sweep, MonotoneAndPermanent) {
  for (int n = 2; n <= 12; ++n) {
    IterationState state(GameParams(n), 1e-12);
    std::map<Position, IntervalCell> before;
    for (const auto& p : state.order()) before[p] = state.cell(p);
    std::size_t undecided = state.undecided_count();
    while (state.undecided_count() > 0) {
      ASSERT_LT(state.sweep_count(), 10000);
      sweep(state);
      EXPECT_LE(state.undecided_count(), undecided);
      undecided = state.undecided_count();
      for (const auto& p : state.order()) {
        const IntervalCell now = state.cell(p);
        const IntervalCell was = before[p];
        EXPECT_GE(now.p_min, was.p_min) << to_string(p);
        EXPECT_LE(now.p_max, was.p_max) << to_string(p);
        EXPECT_LE(0.0, now.p_min);
        EXPECT_LE(now.p_min, now.p_max);
        EXPECT_LE(now.p_max, 1.0);
        if (was.s != Label::Unknown) {
          EXPECT_EQ(now.s, was.s) << to_string(p);
        }
        before[p] = now;
      }
    }
  }
}

// Every bracket, at every sweep, contains the exact optimal value.
TEST(Sweep, BracketsContainTheExactValues) {
  for (int n = 2; n <= 6; ++n) {
    const Solution exact = solve_analytic(GameParams(n)).solution;
    IterativeOptions options;
    int checked = 0;
    options.on_sweep = [&](const IterationState& state) {
      ++checked;
      for (const auto& p : state.order()) {
        const IntervalCell cell = state.cell(p);
        const double v = exact.values.at(p).get_d();
        EXPECT_LE(cell.p_min, v + 1e-14) << "n=" << n << " " << to_string(p);
        EXPECT_GE(cell.p_max, v - 1e-14) << "n=" << n << " " << to_string(p);
      }
    };
    const Solution iterative = solve_iterative(GameParams(n), options);
    EXPECT_EQ(checked, iterative.sweeps);
  }
}

TEST(SolveIterative, KnownValues) {
  const Solution& three = solved(3);
  EXPECT_EQ(three.p_first, rational(6, 11));
  EXPECT_EQ(three.values.at({0, 2, 0}), rational(8, 9));
  EXPECT_EQ(three.values.at({0, 1, 0}), rational(8, 11));
  EXPECT_EQ(three.values.at({0, 0, 1}), rational(4, 11));
  EXPECT_EQ(three.values.at({0, 0, 2}), rational(2, 9));
  EXPECT_EQ(solved(6).p_first, parse_rational("275848876/521145625"));
}

TEST(SolveIterative, TargetThreeStopsOnlyWithOneOpenPointAtTheStart) {
  const Solution& three = solved(3);
  for (const auto& p : reachable_positions(GameParams(3), three.policy)) {
    if (p.a == 0) continue;
    EXPECT_EQ(three.policy.at(p), p == Position({1, 0, 0}) ? Action::Stop : Action::Continue)
        << to_string(p);
  }
}

// With optimal values in hand, (1,0,0) at n = 3 is worth 61/99 when tossing
// on and 7/11 when banking.
TEST(SolveIterative, ActionValuesAtTheOpeningDecision) {
  const ActionValues q = action_values(solved(3).values, {1, 0, 0}, GameParams(3));
  EXPECT_EQ(q.if_continue, rational(61, 99));
  EXPECT_EQ(q.if_stop, rational(7, 11));
  EXPECT_GT(q.if_stop, q.if_continue);
}

TEST(SolveIterative, SolutionShape) {
  for (int n = 2; n <= 20; ++n) {
    const Solution& s = solved(n);
    EXPECT_EQ(s.n, n);
    EXPECT_EQ(s.values.size(), alive_positions(GameParams(n)).size());
    EXPECT_EQ(s.policy.size(), decision_positions(GameParams(n)).size());
    EXPECT_EQ(s.p_first, s.values.at({0, 0, 0}));
    EXPECT_GT(s.sweeps, 0);
    EXPECT_TRUE(s.ties.empty()) << "n=" << n;
  }
}

TEST(SolveIterative, OneStepOptimality) {
  for (int n = 2; n <= 20; ++n) {
    const Solution& s = solved(n);
    for (const auto& p : decision_positions(GameParams(n))) {
      const ActionValues q = action_values(s.values, p, GameParams(n));
      const bool stop = s.policy.at(p) == Action::Stop;
      const BigRational& chosen = stop ? q.if_stop : q.if_continue;
      const BigRational& other = stop ? q.if_continue : q.if_stop;
      EXPECT_EQ(s.values.at(p), chosen);
      if (s.ties.count(p)) {
        EXPECT_EQ(chosen, other);
      } else {
        EXPECT_GT(chosen, other) << "n=" << n << " " << to_string(p);
      }
    }
  }
}

TEST(SolveIterative, ChosenActionEquationsHold) {
  for (int n = 2; n <= 12; ++n) {
    const Solution& s = solved(n);
    const BigRational half(1, 2);
    for (const auto& p : alive_positions(GameParams(n))) {
      const BigRational go_on =
          half * (1 - value_or_win(s, {0, p.c, p.b})) + half * value_or_win(s, {p.a + 1, p.b, p.c});
      if (p.a == 0 || s.policy.at(p) == Action::Continue) {
        EXPECT_EQ(s.values.at(p), go_on);
      } else {
        EXPECT_EQ(s.values.at(p), 1 - value_or_win(s, {0, p.c, p.a + p.b}));
      }
    }
  }
}

TEST(SolveIterative, ForcedTossEliminationResidualIsZero) {
  for (int n = 2; n <= 10; ++n) {
    const Solution& s = solved(n);
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const BigRational r = value_or_win(s, {0, b, c}) - BigRational(1, 3) -
                              BigRational(2, 3) * value_or_win(s, {1, b, c}) +
                              BigRational(1, 3) * value_or_win(s, {1, c, b});
        EXPECT_EQ(r, 0) << "n=" << n << " b=" << b << " c=" << c;
      }
    }
  }
}

TEST(SolveIterative, ValuesDependOnlyOnNeeds) {
  const Solution& small = solved(8);
  const Solution& big = solved(12);
  for (const auto& [p, v] : small.values) {
    const Position q = from_needs(needs_view(p, GameParams(8)), GameParams(12));
    EXPECT_EQ(big.values.at(q), v) << to_string(p);
    if (p.a >= 1) {
      EXPECT_EQ(big.policy.at(q), small.policy.at(p)) << to_string(p);
    }
  }
}

TEST(SolveIterative, FrozenValuesMatchTheOracle) {
  for (const auto& [n, text] : kFirstMoverValues) {
    const oracle::Bellman bellman(n);
    const BigRational frozen = parse_rational(text);
    EXPECT_NEAR(static_cast<double>(bellman.at(0, 0, 0)), frozen.get_d(), 1e-14) << "n=" << n;
  }
}

TEST(SolveIterative, FirstMoverValuesUpToTwenty) {
  for (const auto& [n, text] : kFirstMoverValues) {
    EXPECT_EQ(to_string(solved(n).p_first), text) << "n=" << n;
  }
}

TEST(SolveIterative, AgreesWithTheOracleEverywhere) {
  for (int n = 2; n <= 20; ++n) {
    const oracle::Bellman bellman(n);
    const Solution& s = solved(n);
    for (const auto& [p, v] : s.values) {
      ASSERT_NEAR(static_cast<double>(bellman.at(p.a, p.b, p.c)), v.get_d(), 1e-13)
          << "n=" << n << " " << to_string(p);
      if (p.a == 0) continue;
      const long double gap = bellman.stop_value(p.a, p.b, p.c) -
                              bellman.continue_value(p.a, p.b, p.c);
      if (std::fabs(gap) > 1e-9L) {
        EXPECT_EQ(s.policy.at(p), gap > 0 ? Action::Stop : Action::Continue)
            << "n=" << n << " " << to_string(p);
      }
    }
  }
}

TEST(SolveIterative, Errors) {
  EXPECT_THROW(solve_iterative(GameParams(1)), std::invalid_argument);
  IterativeOptions options;
  options.max_sweeps = 1;
  try {
    solve_iterative(GameParams(6), options);
    FAIL() << "expected NotConverged";
  } catch (const NotConverged& e) {
    EXPECT_FALSE(e.undecided().empty());
    EXPECT_EQ(e.continue_bounds().size(), e.undecided().size());
    EXPECT_EQ(e.stop_bounds().size(), e.undecided().size());
    EXPECT_NE(std::string(e.what()).find(std::to_string(e.undecided().size())),
              std::string::npos);
  }
}

}  // namespace
}  // namespace riskgame
