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


#include "riskgame/cli/commands.hpp"

#include <pthread.h>
#include <signal.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "riskgame/analysis.hpp"
#include "riskgame/analytic.hpp"
#include "riskgame/cli/document.hpp"
#include "riskgame/cli/fixtures.hpp"
#include "riskgame/cli/service.hpp"
#include "riskgame/interval.hpp"
#include "riskgame/simulation.hpp"

namespace riskgame::cli {

using nlohmann::json;

namespace {

constexpr int kMaxAnalyticTarget = 6;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report_not_converged(const NotConverged& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  const auto& undecided = e.undecided();
  for (std::size_t i = 0; i < undecided.size() && i < 20; ++i) {
    const Bounds& c = e.continue_bounds()[i];
    const Bounds& s = e.stop_bounds()[i];
    err << "  " << to_string(undecided[i]) << " continue [" << c.low << ", " << c.high
        << "] stop [" << s.low << ", " << s.high << "]\n";
  }
  if (undecided.size() > 20) err << "  ... " << undecided.size() - 20 << " more\n";
}

// Writes text to path, or to out when path is empty.
bool emit(const std::string& text, const std::string& path, std::ostream& out,
          std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

const char* coin_name(Coin coin) { return coin == Coin::Heads ? "heads" : "tails"; }

}  // namespace

void configure_logging() {
  auto logger = spdlog::get("riskgame");
  if (!logger) logger = spdlog::stderr_color_mt("riskgame");
  spdlog::set_default_logger(logger);
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("RISKGAME_LOG")) {
    const std::string name = env;
    const auto parsed = spdlog::level::from_str(name);
    if (parsed != spdlog::level::off || name == "off") level = parsed;
  }
  spdlog::set_level(level);
}

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n < 2) {
    err << "error: --n must be at least 2 (a target of 1 has no decisions)\n";
    return kUsage;
  }
  if (options.method != "iterative" && options.method != "analytic") {
    err << "error: --method must be iterative or analytic\n";
    return kUsage;
  }
  if (options.method == "analytic" && options.n > kMaxAnalyticTarget) {
    err << "error: the analytic method supports n <= " << kMaxAnalyticTarget
        << "; use --method iterative\n";
    return kUsage;
  }
  if (!(options.epsilon > 0.0) || options.max_sweeps < 1) {
    err << "error: --epsilon must be positive and --max-sweeps at least 1\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Solution solution;
  try {
    if (options.method == "analytic") {
      AnalyticOptions analytic;
      analytic.budget = options.budget;
      StrategyReport report = solve_analytic(GameParams(options.n), analytic);
      spdlog::info("analytic n={}: {} strategies compared ({})", options.n,
                   report.strategies_compared, report.strategies_total_note);
      solution = std::move(report.solution);
    } else {
      IterativeOptions iterative;
      iterative.epsilon = options.epsilon;
      iterative.max_sweeps = options.max_sweeps;
      iterative.on_sweep = [](const IterationState& state) {
        spdlog::debug("sweep {}: {} undecided", state.sweep_count(), state.undecided_count());
      };
      solution = solve_iterative(GameParams(options.n), iterative);
      spdlog::info("iterative n={}: {} sweeps, {} exact corrections", options.n,
                   solution.sweeps, solution.flips);
    }
  } catch (const NotConverged& e) {
    report_not_converged(e, err);
    return kNotConverged;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  spdlog::info("n={} P(0,0,0)={} in {:.3f}s", options.n, to_string(solution.p_first),
               seconds_since(start));

  if (!emit(canonical_dump(policy_document(solution)), options.out, out, err)) {
    return kUsage;
  }
  return kOk;
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  if (options.format != "ascii" && options.format != "csv" && options.format != "json") {
    err << "error: --format must be ascii, csv or json\n";
    return kUsage;
  }
  Solution solution;
  if (!options.policy.empty()) {
    try {
      solution = load_policy_file(options.policy);
    } catch (const DocumentError& e) {
      err << "error: " << e.what() << "\n";
      return kMismatch;
    }
    if (options.n != 0 && options.n != solution.n) {
      err << "error: --n " << options.n << " disagrees with the policy file (n="
          << solution.n << ")\n";
      return kUsage;
    }
  } else {
    if (options.n < 2) {
      err << "error: --n must be at least 2\n";
      return kUsage;
    }
    try {
      solution = solve_iterative(GameParams(options.n));
    } catch (const NotConverged& e) {
      report_not_converged(e, err);
      return kNotConverged;
    }
  }

  const ThresholdTable table = extract_thresholds(solution);
  for (const auto& v : table.threshold_violations) {
    spdlog::warn("no threshold form at r={}, s={}: {}", v.r, v.s, v.reason);
  }
  std::string text;
  if (options.format == "ascii") {
    text = to_ascii(table);
  } else if (options.format == "csv") {
    text = to_csv(table);
  } else {
    text = to_json(table);
  }
  return emit(text, options.out, out, err) ? kOk : kUsage;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n_max < 2) {
    err << "error: --n must be at least 2\n";
    return kUsage;
  }
  std::size_t failures = 0;
  try {
    failures = print_fixtures(run_fixtures(options.n_max, options.budget), out);
  } catch (const NotConverged& e) {
    report_not_converged(e, err);
    return kNotConverged;
  } catch (const BudgetExceeded& e) {
    out << "FAIL  analytic enumeration: " << e.what() << "\n";
    return kMismatch;
  }

  if (!options.policy.empty()) {
    Solution stored;
    try {
      stored = load_policy_file(options.policy);
    } catch (const DocumentError& e) {
      out << "FAIL  policy file " << options.policy << ": " << e.what() << "\n";
      return kMismatch;
    }
    const json expected = policy_document(solve_iterative(GameParams(stored.n)));
    const json actual = policy_document(stored);
    if (expected == actual) {
      out << "ok    policy file " << options.policy << " (n=" << stored.n << ")\n";
    } else {
      ++failures;
      out << "FAIL  policy file " << options.policy << " (n=" << stored.n << ")\n";
      const auto diff = json::diff(expected, actual);
      std::size_t shown = 0;
      for (const auto& op : diff) {
        if (++shown > 20) {
          out << "  ... " << diff.size() - 20 << " more differences\n";
          break;
        }
        const auto path = json::json_pointer(op["path"].get<std::string>());
        out << "  " << op["path"].get<std::string>() << ": expected "
            << (expected.contains(path) ? expected.at(path).dump() : "(absent)")
            << ", found " << (op.contains("value") ? op["value"].dump() : "(absent)") << "\n";
      }
    }
  }
  return failures == 0 ? kOk : kMismatch;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  if (options.trials < 1) {
    err << "error: --trials must be at least 1\n";
    return kUsage;
  }
  Solution solution;
  if (!options.policy.empty()) {
    try {
      solution = load_policy_file(options.policy);
    } catch (const DocumentError& e) {
      err << "error: " << e.what() << "\n";
      return kMismatch;
    }
    if (options.n != 0 && options.n != solution.n) {
      err << "error: --n " << options.n << " disagrees with the policy file (n="
          << solution.n << ")\n";
      return kUsage;
    }
  } else {
    if (options.n < 2) {
      err << "error: --n must be at least 2\n";
      return kUsage;
    }
    try {
      solution = solve_iterative(GameParams(options.n));
    } catch (const NotConverged& e) {
      report_not_converged(e, err);
      return kNotConverged;
    }
  }

  const PolicyPair pair = symmetric_pair(solution);
  const BigRational exact =
      evaluate_policy(GameParams(solution.n), solution.policy).at({0, 0, 0});

  if (!options.trace.empty()) {
    std::ofstream trace(options.trace, std::ios::binary);
    if (!trace) {
      err << "error: cannot write " << options.trace << "\n";
      return kUsage;
    }
    const std::uint64_t games = std::min(options.trace_games, options.trials);
    for (std::uint64_t g = 0; g < games; ++g) {
      SeededCoins coins(game_seed(options.seed, g));
      const GameRecord record = play_game(pair, CoinSource(std::ref(coins)));
      for (std::size_t i = 0; i < record.trace.size(); ++i) {
        const TraceStep& s = record.trace[i];
        json line{{"game", g},
                  {"step", i},
                  {"player", s.player},
                  {"a", s.position.a},
                  {"b", s.position.b},
                  {"c", s.position.c},
                  {"action", s.action ? to_string(*s.action) : "toss"},
                  {"outcome", s.outcome ? json(coin_name(*s.outcome)) : json(nullptr)}};
        trace << line.dump() << "\n";
      }
      trace << json{{"game", g}, {"winner", record.winner}}.dump() << "\n";
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const TrialReport report = estimate(pair, options.trials, options.seed, options.threads);
  spdlog::info("{} games in {:.3f}s", report.trials, seconds_since(start));

  const double deviation = report.estimate - exact.get_d();
  json doc{{"n", solution.n},
           {"trials", report.trials},
           {"seed", report.seed},
           {"wins_first", report.wins_first},
           {"estimate", report.estimate},
           {"std_error", report.std_error},
           {"exact", fraction_json(exact)},
           {"within_3_std_errors", std::abs(deviation) <= 3.0 * report.std_error}};
  out << canonical_dump(doc);
  return kOk;
}

int cmd_serve(const ServeOptions& options, std::ostream& out, std::ostream& err) {
  if (options.targets.empty() && options.policies.empty()) {
    err << "error: give at least one --n or --policy\n";
    return kUsage;
  }
  if (options.port < 0 || options.port > 65535) {
    err << "error: --port must be in 0..65535\n";
    return kUsage;
  }
  std::vector<Solution> solutions;
  for (const auto& path : options.policies) {
    try {
      solutions.push_back(load_policy_file(path));
    } catch (const DocumentError& e) {
      err << "error: " << e.what() << "\n";
      return kMismatch;
    }
  }
  for (int n : options.targets) {
    if (n < 2) {
      err << "error: --n must be at least 2\n";
      return kUsage;
    }
    try {
      solutions.push_back(solve_iterative(GameParams(n)));
    } catch (const NotConverged& e) {
      report_not_converged(e, err);
      return kNotConverged;
    }
  }

  std::optional<PolicyService> service;
  try {
    service.emplace(std::move(solutions));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  // Route SIGINT/SIGTERM to a waiter thread; the server threads inherit the
  // blocked mask.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  HttpServer server(*service);
  int port = 0;
  try {
    port = server.bind(options.host, options.port);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::thread waiter([&] {
    int signal = 0;
    sigwait(&stop_signals, &signal);
    spdlog::info("signal {}, shutting down", signal);
    server.stop();
  });
  out << "listening on http://" << options.host << ":" << port << "\n" << std::flush;
  server.listen();
  pthread_kill(waiter.native_handle(), SIGTERM);  // no-op when already woken
  waiter.join();
  return kOk;
}

}  // namespace riskgame::cli
