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


// riskgame: solve "Risk or Safety", print strategy tables, verify known
// values, simulate games and serve policies over HTTP.

#include <iostream>

#include <CLI11.hpp>

#include "riskgame/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace riskgame::cli;

  CLI::App app{"Optimal play for the coin game Risk or Safety"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a target and write its policy document");
  solve_cmd->add_option("--n", solve.n, "Points needed to win")->required();
  solve_cmd->add_option("--method", solve.method, "iterative or analytic")
      ->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "Output file (default: stdout)");
  solve_cmd->add_option("--epsilon", solve.epsilon, "Decision margin of the interval sweeps")
      ->capture_default_str();
  solve_cmd->add_option("--max-sweeps", solve.max_sweeps, "Sweep limit before giving up")
      ->capture_default_str();
  solve_cmd->add_option("--budget", solve.budget, "Analytic strategy evaluations allowed")
      ->capture_default_str();

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Print coins to toss before banking");
  table_cmd->add_option("--n", table.n, "Points needed to win");
  table_cmd->add_option("--format", table.format, "ascii, csv or json")->capture_default_str();
  table_cmd->add_option("--policy", table.policy, "Read a policy document instead of solving");
  table_cmd->add_option("--out", table.out, "Output file (default: stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check known values and method agreement");
  verify_cmd->add_option("--n", verify.n_max, "Largest target to check")->capture_default_str();
  verify_cmd->add_option("--budget", verify.budget, "Analytic strategy evaluations allowed")
      ->capture_default_str();
  verify_cmd->add_option("--policy", verify.policy, "Policy document to check against a fresh solve");

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Estimate the first mover's chance by play");
  simulate_cmd->add_option("--n", simulate.n, "Points needed to win");
  simulate_cmd->add_option("--trials", simulate.trials, "Games to play")->capture_default_str();
  simulate_cmd->add_option("--seed", simulate.seed, "Run seed")->capture_default_str();
  simulate_cmd->add_option("--policy", simulate.policy, "Policy document for both players");
  simulate_cmd->add_option("--trace", simulate.trace, "Write an NDJSON trace to this file");
  simulate_cmd->add_option("--trace-games", simulate.trace_games, "Games to trace")
      ->capture_default_str();
  simulate_cmd->add_option("--threads", simulate.threads, "Worker threads (0: all cores)")
      ->capture_default_str();

  ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve policies over HTTP");
  serve_cmd->add_option("--n", serve.targets, "Targets to solve and serve");
  serve_cmd->add_option("--policy", serve.policies, "Policy documents to serve");
  serve_cmd->add_option("--host", serve.host, "Address to bind")->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "Port to bind (0: any free port)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  configure_logging();
  if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
  if (*table_cmd) return cmd_table(table, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
  if (*simulate_cmd) return cmd_simulate(simulate, std::cout, std::cerr);
  return cmd_serve(serve, std::cout, std::cerr);
}
