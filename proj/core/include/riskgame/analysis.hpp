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

#ifndef RISKGAME_ANALYSIS_HPP
#define RISKGAME_ANALYSIS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riskgame/exact.hpp"
#include "riskgame/policy.hpp"

namespace riskgame {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Chance of winning against an opponent who needs one point by tossing until
// r points are in hand: 2 p / (1 + p) with p = 2^-r.
BigRational p_all(int r);

// Same, but banking x points first and then going for the remaining r - x.
BigRational p_split(int r, int x);

struct AllInReport {
  int n = 0;
  BigRational p_all;
  std::vector<std::pair<int, BigRational>> splits;  // (x, p_split(n, x))
  bool dominance_holds = false;
};

AllInReport all_in_report(int r);

// Coins to toss before banking, indexed by what each side still needs.
struct ThresholdTable {
  struct Violation {
    int r = 0;
    int s = 0;
    std::string reason;
  };

  int n = 0;
  std::map<std::pair<int, int>, int> entries;  // (r, s) -> t, 2 <= r, s <= n
  std::set<std::pair<int, int>> tie_flags;     // a tie on the played path
  std::vector<Violation> threshold_violations;

  int at(int r, int s) const { return entries.at({r, s}); }
};

// t(r, s) is the first a >= 1 at which (a, n - r, n - s) stops, or r when the
// mover never stops.
ThresholdTable extract_thresholds(const Solution& solution);

// Rows left out of the threshold table.
struct SpecialRows {
  // r = 1: the mover wins with the next heads, so no decision exists.
  std::size_t need_one_decisions = 0;
  // s = 1: decisions for r = 2..n, (a, action) along (a, n - r, n - 1).
  std::map<int, std::vector<std::pair<int, Action>>> opponent_needs_one;
  bool all_in_when_opponent_needs_one = false;
};

SpecialRows special_rows(const Solution& solution);

struct FirstPlayerFraction {
  int n = 0;
  std::string numerator;
  std::string denominator;
};

// P(0,0,0) per target, ascending n.
std::vector<FirstPlayerFraction> oeis_export(const std::vector<Solution>& solutions);

// "n numerator denominator" per line.
std::string format_oeis(const std::vector<FirstPlayerFraction>& rows);

std::string to_ascii(const ThresholdTable& table);
std::string to_csv(const ThresholdTable& table);
// {"n": n, "rows": [[t(2,2), t(2,3), ...], ...]}
std::string to_json(const ThresholdTable& table);

// Rows r = 2..n, columns s = 2..n.
std::vector<std::vector<int>> threshold_grid(const ThresholdTable& table);

}  // namespace riskgame

#endif  // RISKGAME_ANALYSIS_HPP
