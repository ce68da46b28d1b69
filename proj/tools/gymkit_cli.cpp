// Copyright 2026 The gymkit Authors
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

// Command-line benchmark runner: list, describe, run, report.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gymkit/bench.hpp"
#include "gymkit/error.hpp"
#include "gymkit/registry.hpp"

namespace {

using gymkit::Error;
using gymkit::Overrides;
namespace bench = gymkit::bench;

Overrides parse_assignments(const std::vector<std::string>& items) {
  Overrides out;
  for (const auto& item : items) out.push_back(gymkit::split_assignment(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gymkit: versioned RL environments with default-on monitoring"};
  app.require_subcommand(1);

  app.add_subcommand("list", "Print registered environment ids, one per line");

  auto* describe = app.add_subcommand("describe", "Show spaces, threshold and config keys");
  std::string describe_id;
  describe->add_option("id", describe_id, "Environment id, e.g. CartPole-v0")->required();

  auto* run = app.add_subcommand("run", "Train a baseline agent on a monitored environment");
  bench::RunConfig config;
  std::int64_t episodes = 0;
  std::int64_t iterations = 0;
  std::string out_dir = ".";
  std::vector<std::string> overrides;
  std::vector<std::string> params;
  run->add_option("--env", config.env, "Environment id")->required();
  run->add_option("--agent", config.agent, "random, qlearn or cem")->required();
  auto* episodes_opt =
      run->add_option("--episodes", episodes, "Episode budget (random, qlearn)");
  auto* iterations_opt =
      run->add_option("--iterations", iterations, "Iteration budget (cem)");
  episodes_opt->excludes(iterations_opt);
  run->add_option("--seed", config.seed, "Master seed")->default_val(0);
  run->add_option("--out", out_dir, "Output directory")->default_val(".");
  run->add_option("--override", overrides, "Environment config key=value (repeatable)");
  run->add_option("--param", params, "Agent hyperparameter key=value (repeatable)");
  auto* eval_opt = run->add_option("--eval-episodes", config.eval_episodes,
                                   "Evaluate the learned policy afterwards (cem)");

  auto* report = app.add_subcommand("report", "Summarize logs and write learning curves");
  std::vector<std::string> log_paths;
  std::int64_t window = gymkit::kDefaultWindow;
  std::string curve_dir;
  report->add_option("logs", log_paths, "Monitor log files")->required();
  report->add_option("--window", window, "Moving-average window")->default_val(gymkit::kDefaultWindow);
  report->add_option("--out", curve_dir, "Directory for curve files (default: next to each log)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bench::kExitOk : bench::kExitUsage;
  }

  try {
    const auto& registry = gymkit::builtin_registry();
    if (app.got_subcommand("list")) {
      for (const auto& id : registry.ids()) std::cout << id << "\n";
    } else if (app.got_subcommand("describe")) {
      std::cout << bench::describe_env(registry.spec(gymkit::parse_id(describe_id)));
    } else if (app.got_subcommand("run")) {
      const bool is_cem = config.agent == "cem";
      if (is_cem && *episodes_opt) {
        throw Error(gymkit::ErrorKind::kInvalidArgument, "cem takes --iterations, not --episodes");
      }
      if (!is_cem && *iterations_opt) {
        throw Error(gymkit::ErrorKind::kInvalidArgument,
                    config.agent + " takes --episodes, not --iterations");
      }
      if (!is_cem && *eval_opt) {
        throw Error(gymkit::ErrorKind::kInvalidArgument, "--eval-episodes applies to cem only");
      }
      if (is_cem) {
        config.budget = *iterations_opt ? iterations : 50;
      } else {
        config.budget = *episodes_opt ? episodes : 1000;
      }
      config.out_dir = out_dir;
      config.overrides = parse_assignments(overrides);
      config.params = parse_assignments(params);
      std::cout << bench::format_run_summary(bench::run_benchmark(config, registry));
    } else if (app.got_subcommand("report")) {
      std::vector<std::filesystem::path> paths(log_paths.begin(), log_paths.end());
      const auto rows = bench::report(paths, window, curve_dir, registry);
      std::cout << bench::format_report_table(rows);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bench::exit_code(e.kind());
  }
  return bench::kExitOk;
}
