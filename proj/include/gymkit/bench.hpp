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

#ifndef GYMKIT_BENCH_HPP_
#define GYMKIT_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gymkit/config.hpp"
#include "gymkit/error.hpp"
#include "gymkit/monitor.hpp"
#include "gymkit/registry.hpp"

namespace gymkit::bench {

/// Process exit codes of the command-line runner.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUnknownEnv = 2,
  kExitIncompatibleAgent = 3,
  kExitIo = 4,
  kExitMalformedLog = 5,
};

int exit_code(ErrorKind kind);

inline constexpr std::int64_t kFinalPerformanceTail = 100;

struct RunConfig {
  std::string env;
  /// One of "random", "qlearn", "cem".
  std::string agent;
  /// Episodes for random/qlearn, iterations for cem.
  std::int64_t budget = 1;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  Overrides overrides;
  /// Agent hyperparameters, validated against the agent's schema.
  Overrides params;
  /// CEM only: episodes for evaluating the learned policy after training, on
  /// a separate unmonitored env keyed by `seed + 2`. Zero skips evaluation.
  std::int64_t eval_episodes = 0;
};

struct RunResult {
  std::filesystem::path log_path;
  MonitorLog log;
  double final_performance = 0.0;
  std::int64_t tail = 0;
  std::optional<ThresholdSpec> threshold;
  std::optional<std::int64_t> episodes_to_threshold;
  /// CEM only: mean of the final sampling distribution (bias last).
  std::vector<double> policy_weights;
  /// Mean evaluation return when `eval_episodes` > 0.
  std::optional<double> eval_return;
};

/// Accepted --param keys with defaults for an agent; throws kInvalidArgument
/// for an unknown agent.
std::vector<std::pair<std::string, std::string>> agent_schema(const std::string& agent);

/// `<env>-<agent>-<seed>` used for log and curve file names.
std::string run_stem(const RunConfig& config);

/// Builds the monitored env, trains the agent for the budget and writes the
/// log to `<out>/<stem>.monitor.jsonl`. The env stream is keyed by `seed`,
/// the agent stream by `seed + 1`.
RunResult run_benchmark(const RunConfig& config,
                        const Registry& registry = builtin_registry());

std::string format_run_summary(const RunResult& result);

struct ReportRow {
  std::filesystem::path log_path;
  std::filesystem::path curve_path;
  std::string env;
  std::int64_t episodes = 0;
  double final_performance = 0.0;
  std::optional<ThresholdSpec> threshold;
  std::optional<std::int64_t> episodes_to_threshold;
};

/// Reads each log, writes `<stem>.curve.csv` (into `curve_dir`, or next to
/// the log when empty) and returns one summary row per log. Logs are opened
/// read-only.
std::vector<ReportRow> report(const std::vector<std::filesystem::path>& logs,
                              std::int64_t window,
                              const std::filesystem::path& curve_dir = {},
                              const Registry& registry = builtin_registry());

std::string format_report_table(const std::vector<ReportRow>& rows);

/// Curve rows as `episode,mean` lines under a header.
std::string format_curve_csv(const std::vector<CurvePoint>& curve);

/// Human-readable description of a registered environment.
std::string describe_env(const EnvSpec& spec);

}  // namespace gymkit::bench

#endif  // GYMKIT_BENCH_HPP_
