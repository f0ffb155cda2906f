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

#include "riskgame/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace riskgame {

namespace {

// 2^-k
BigRational streak(int k) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(k);
  return BigRational(mpz_class(1), den);
}

}  // namespace

BigRational p_all(int r) {
  if (r < 1) throw DomainError("p_all needs r >= 1, got " + std::to_string(r));
  BigRational p = streak(r);
  return 2 * p / (1 + p);
}

BigRational p_split(int r, int x) {
  if (x < 1 || x > r - 1) {
    throw DomainError("p_split needs 1 <= x <= r - 1, got r=" + std::to_string(r) +
                      ", x=" + std::to_string(x));
  }
  BigRational first = streak(x);
  BigRational rest = streak(r - x);
  return (2 * first / (1 + first)) * (rest / (1 + rest));
}

AllInReport all_in_report(int r) {
  AllInReport report;
  report.n = r;
  report.p_all = p_all(r);
  report.dominance_holds = true;
  for (int x = 1; x <= r - 1; ++x) {
    BigRational value = p_split(r, x);
    if (!(value < report.p_all)) report.dominance_holds = false;
    report.splits.emplace_back(x, std::move(value));
  }
  return report;
}

ThresholdTable extract_thresholds(const Solution& solution) {
  GameParams params(solution.n);
  const int n = params.n();
  ThresholdTable table;
  table.n = n;
  for (int r = 2; r <= n; ++r) {
    for (int s = 2; s <= n; ++s) {
      const int b = n - r;
      const int c = n - s;
      int t = r;
      bool tie = false;
      std::string problem;
      for (int a = 1; a < r; ++a) {
        auto it = solution.policy.find({a, b, c});
        if (it == solution.policy.end()) {
          problem = "no decision at " + to_string(Position{a, b, c});
          break;
        }
        if (solution.ties.count({a, b, c})) tie = true;
        if (it->second == Action::Stop) {
          t = a;
          break;
        }
      }
      if (!problem.empty()) {
        table.threshold_violations.push_back({r, s, problem});
        continue;
      }
      table.entries[{r, s}] = t;
      if (tie) table.tie_flags.insert({r, s});
    }
  }
  return table;
}

SpecialRows special_rows(const Solution& solution) {
  GameParams params(solution.n);
  const int n = params.n();
  SpecialRows rows;
  for (const auto& [p, action] : solution.policy) {
    if (p.b == n - 1) ++rows.need_one_decisions;
  }
  rows.all_in_when_opponent_needs_one = true;
  for (int r = 2; r <= n; ++r) {
    auto& row = rows.opponent_needs_one[r];
    for (int a = 1; a < r; ++a) {
      Action action = solution.policy.at({a, n - r, n - 1});
      row.emplace_back(a, action);
      if (action != Action::Continue) rows.all_in_when_opponent_needs_one = false;
    }
  }
  return rows;
}

std::vector<FirstPlayerFraction> oeis_export(const std::vector<Solution>& solutions) {
  std::vector<FirstPlayerFraction> out;
  for (const auto& s : solutions) {
    out.push_back({s.n, numerator_string(s.p_first), denominator_string(s.p_first)});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.n < rhs.n; });
  return out;
}

std::string format_oeis(const std::vector<FirstPlayerFraction>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += std::to_string(row.n) + " " + row.numerator + " " + row.denominator + "\n";
  }
  return out;
}

std::vector<std::vector<int>> threshold_grid(const ThresholdTable& table) {
  std::vector<std::vector<int>> grid;
  for (int r = 2; r <= table.n; ++r) {
    std::vector<int> row;
    for (int s = 2; s <= table.n; ++s) {
      auto it = table.entries.find({r, s});
      row.push_back(it == table.entries.end() ? 0 : it->second);
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

std::string to_ascii(const ThresholdTable& table) {
  std::ostringstream os;
  os << "Coins to toss before banking (n=" << table.n << ")\n";
  os << "rows: Points Player 1 needs, columns: Points Opponent needs\n";
  os << "    |";
  for (int s = 2; s <= table.n; ++s) os << std::setw(3) << s;
  os << "\n----+" << std::string(static_cast<std::size_t>(3 * (table.n - 1)), '-') << "\n";
  auto grid = threshold_grid(table);
  for (int r = 2; r <= table.n; ++r) {
    os << std::setw(3) << r << " |";
    for (int t : grid[static_cast<std::size_t>(r - 2)]) os << std::setw(3) << t;
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const ThresholdTable& table) {
  std::ostringstream os;
  os << "r\\s";
  for (int s = 2; s <= table.n; ++s) os << ',' << s;
  os << '\n';
  auto grid = threshold_grid(table);
  for (int r = 2; r <= table.n; ++r) {
    os << r;
    for (int t : grid[static_cast<std::size_t>(r - 2)]) os << ',' << t;
    os << '\n';
  }
  return os.str();
}

std::string to_json(const ThresholdTable& table) {
  nlohmann::json doc;
  doc["n"] = table.n;
  doc["rows"] = threshold_grid(table);
  return doc.dump(2) + "\n";
}

}  // namespace riskgame
