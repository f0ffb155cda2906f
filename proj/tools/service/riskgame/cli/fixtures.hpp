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


#ifndef RISKGAME_CLI_FIXTURES_HPP
#define RISKGAME_CLI_FIXTURES_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace riskgame::cli {

struct FixtureResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

// Known exact values and policies, plus analytic/iterative agreement for
// every target 2..n_max (analytic only up to 6). Targets above 6 are checked
// for one-step optimality of the iterative solution instead.
std::vector<FixtureResult> run_fixtures(int n_max, std::size_t analytic_budget);

// One line per fixture; returns the number of failures.
std::size_t print_fixtures(const std::vector<FixtureResult>& results, std::ostream& out);

}  // namespace riskgame::cli

#endif  // RISKGAME_CLI_FIXTURES_HPP
