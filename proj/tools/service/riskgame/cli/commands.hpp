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


#ifndef RISKGAME_CLI_COMMANDS_HPP
#define RISKGAME_CLI_COMMANDS_HPP

// Subcommands of the riskgame tool. Each returns the process exit code:
//   0 success
//   1 usage error (bad arguments, unsupported target)
//   2 the interval iteration did not converge
//   3 verification mismatch, invalid policy file, or analytic budget exceeded

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace riskgame::cli {

enum ExitCode { kOk = 0, kUsage = 1, kNotConverged = 2, kMismatch = 3 };

struct SolveOptions {
  int n = 0;
  std::string method = "iterative";  // or "analytic"
  std::string out;                   // empty writes to stdout
  double epsilon = 1e-12;
  int max_sweeps = 10000;
  std::size_t budget = 100000;
};

struct TableOptions {
  int n = 0;
  std::string format = "ascii";  // ascii, csv or json
  std::string policy;            // read thresholds from a policy file
  std::string out;
};

struct VerifyOptions {
  int n_max = 5;
  std::size_t budget = 100000;
  std::string policy;  // also check this file against a fresh solve
};

struct SimulateOptions {
  int n = 0;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  std::string policy;      // both players follow it; default is optimal play
  std::string trace;       // NDJSON trace of the first trace_games games
  std::uint64_t trace_games = 1;
  unsigned threads = 0;
};

struct ServeOptions {
  std::vector<int> targets;
  std::vector<std::string> policies;
  std::string host = "127.0.0.1";
  int port = 8080;
};

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
// Blocks until SIGINT or SIGTERM.
int cmd_serve(const ServeOptions& options, std::ostream& out, std::ostream& err);

// Reads RISKGAME_LOG (trace, debug, info, warn, error, critical, off) and
// routes log output to stderr. Unset or unknown means warn.
void configure_logging();

}  // namespace riskgame::cli

#endif  // RISKGAME_CLI_COMMANDS_HPP
