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

#include "gymkit/bench.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "gymkit/baselines.hpp"

namespace gymkit::bench {

namespace fs = std::filesystem;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedId:
    case ErrorKind::kUnknownId:
    case ErrorKind::kUnknownConfigKey:
    case ErrorKind::kInvalidConfigValue:
      return kExitUnknownEnv;
    case ErrorKind::kIncompatibleAgent:
      return kExitIncompatibleAgent;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kMalformedLog:
    case ErrorKind::kEmptyLog:
      return kExitMalformedLog;
    default:
      return kExitUsage;
  }
}

std::vector<std::pair<std::string, std::string>> agent_schema(const std::string& agent) {
  if (agent == "random") return {};
  if (agent == "qlearn") {
    const baselines::QLearningParams d;
    return {{"alpha", format_real(d.alpha)},
            {"gamma", format_real(d.gamma)},
            {"epsilon_start", format_real(d.epsilon_start)},
            {"epsilon_end", format_real(d.epsilon_end)},
            {"decay_fraction", format_real(d.decay_fraction)}};
  }
  if (agent == "cem") {
    const baselines::CemParams d;
    return {{"population", std::to_string(d.population)},
            {"elite_fraction", format_real(d.elite_fraction)},
            {"episodes_per_candidate", std::to_string(d.episodes_per_candidate)},
            {"initial_stddev", format_real(d.initial_stddev)},
            {"stddev_floor", format_real(d.stddev_floor)}};
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown agent '" + agent + "' (expected random, qlearn or cem)");
}

std::string run_stem(const RunConfig& config) {
  return config.env + "-" + config.agent + "-" + std::to_string(config.seed);
}

namespace {

EnvConfig resolve_params(const std::string& agent, const Overrides& params) {
  const auto schema = agent_schema(agent);
  std::map<std::string, std::string> values(schema.begin(), schema.end());
  for (const auto& [key, value] : params) {
    auto it = values.find(key);
    if (it == values.end()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "agent '" + agent + "' has no parameter '" + key + "'");
    }
    it->second = value;
  }
  return EnvConfig(std::move(values));
}

// Parameter parse failures are usage errors, not environment config errors.
template <typename F>
auto param(F&& read) {
  try {
    return read();
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvalidArgument, e.what());
  }
}

std::string threshold_cell(const std::optional<ThresholdSpec>& threshold,
                           const std::optional<std::int64_t>& episodes) {
  if (!threshold) return "-";
  return episodes ? std::to_string(*episodes) : "not reached";
}

}  // namespace

RunResult run_benchmark(const RunConfig& config, const Registry& registry) {
  if (config.budget < 1) {
    throw Error(ErrorKind::kInvalidArgument, "budget must be >= 1");
  }
  if (config.eval_episodes < 0) {
    throw Error(ErrorKind::kInvalidArgument, "eval episodes must be >= 0");
  }
  const EnvId id = parse_id(config.env);
  const EnvSpec& spec = registry.spec(id);
  const EnvConfig params = resolve_params(config.agent, config.params);
  baselines::QLearningParams qlearn;
  baselines::CemParams cem;
  param([&] {
    if (config.agent == "qlearn") {
      qlearn.alpha = params.get_double("alpha");
      qlearn.gamma = params.get_double("gamma");
      qlearn.epsilon_start = params.get_double("epsilon_start");
      qlearn.epsilon_end = params.get_double("epsilon_end");
      qlearn.decay_fraction = params.get_double("decay_fraction");
    } else if (config.agent == "cem") {
      cem.population = params.get_int("population");
      cem.elite_fraction = params.get_double("elite_fraction");
      cem.episodes_per_candidate = params.get_int("episodes_per_candidate");
      cem.initial_stddev = params.get_double("initial_stddev");
      cem.stddev_floor = params.get_double("stddev_floor");
    }
    return 0;
  });
  auto env = registry.make(id, config.overrides);

  if (config.agent == "qlearn") baselines::require_tabular(env->descriptor());
  if (config.agent == "cem") baselines::linear_policy_dim(env->descriptor());

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  RunResult result;
  result.log_path = config.out_dir / (run_stem(config) + ".monitor.jsonl");
  env->seed(config.seed);
  env->attach_log(result.log_path);

  Rng agent_rng(config.seed + 1);
  if (config.agent == "random") {
    baselines::run_random_policy(*env, config.budget, agent_rng);
  } else if (config.agent == "qlearn") {
    baselines::train_q_learning(*env, config.budget, qlearn, agent_rng);
  } else {
    result.policy_weights = baselines::train_cem(*env, config.budget, cem, agent_rng).policy.mean;
    if (config.eval_episodes > 0) {
      auto eval_env = registry.make_unmonitored(id, config.overrides);
      eval_env->seed(config.seed + 2);
      result.eval_return = baselines::evaluate_linear_policy(
          *eval_env, result.policy_weights, config.eval_episodes);
    }
  }

  result.log = env->log();
  const auto n = static_cast<std::int64_t>(result.log.episodes.size());
  result.tail = std::min(kFinalPerformanceTail, n);
  result.final_performance = final_performance(result.log, result.tail);
  result.threshold = spec.threshold;
  if (spec.threshold) {
    result.episodes_to_threshold = episodes_to_threshold(result.log, *spec.threshold);
  }
  return result;
}

std::string format_run_summary(const RunResult& r) {
  std::ostringstream out;
  out << "log: " << r.log_path.string() << "\n"
      << "episodes: " << r.log.episodes.size() << "\n"
      << "final_performance (last " << r.tail << "): "
      << format_real(r.final_performance) << "\n";
  if (r.threshold) {
    out << "episodes_to_threshold (target " << format_real(r.threshold->target)
        << ", window " << r.threshold->window
        << "): " << threshold_cell(r.threshold, r.episodes_to_threshold) << "\n";
  }
  if (r.eval_return) {
    out << "eval_return: " << format_real(*r.eval_return) << "\n";
  }
  return out.str();
}

std::string format_curve_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "episode,mean\n";
  for (const auto& p : curve) {
    out += std::to_string(p.episode) + "," + format_real(p.mean) + "\n";
  }
  return out;
}

std::vector<ReportRow> report(const std::vector<fs::path>& logs,
                              std::int64_t window, const fs::path& curve_dir,
                              const Registry& registry) {
  if (logs.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "report needs at least one log");
  }
  std::vector<ReportRow> rows;
  for (const auto& path : logs) {
    MonitorLog log;
    try {
      log = read_log_file(path);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kMalformedLog) throw;
      throw Error(ErrorKind::kMalformedLog, path.string() + ": " + e.what());
    }
    if (log.episodes.empty()) {
      throw Error(ErrorKind::kEmptyLog, path.string() + " has no episodes");
    }
    ReportRow row;
    row.log_path = path;
    row.env = log.manifest.env;
    row.episodes = static_cast<std::int64_t>(log.episodes.size());
    row.final_performance =
        final_performance(log, std::min(kFinalPerformanceTail, row.episodes));
    try {
      const EnvSpec& spec = registry.spec(parse_id(log.manifest.env));
      row.threshold = spec.threshold;
    } catch (const Error&) {
      // Logs from environments this build does not know still get curves.
    }
    if (row.threshold) {
      row.episodes_to_threshold = episodes_to_threshold(log, *row.threshold);
    }

    std::string stem = path.filename().string();
    constexpr std::string_view kSuffix = ".monitor.jsonl";
    if (stem.ends_with(kSuffix)) {
      stem.resize(stem.size() - kSuffix.size());
    } else {
      stem = path.stem().string();
    }
    const fs::path dir = curve_dir.empty() ? path.parent_path() : curve_dir;
    row.curve_path = dir / (stem + ".curve.csv");
    std::ofstream out(row.curve_path, std::ios::binary | std::ios::trunc);
    out << format_curve_csv(learning_curve(log, window));
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + row.curve_path.string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_report_table(const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> cells = {
      {"env", "episodes", "final_performance", "episodes_to_threshold"}};
  for (const auto& r : rows) {
    cells.push_back({r.env, std::to_string(r.episodes),
                     format_real(r.final_performance),
                     threshold_cell(r.threshold, r.episodes_to_threshold)});
  }
  std::vector<std::size_t> width(4, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      out += line[c];
      if (c + 1 < 4) out += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::string describe_env(const EnvSpec& spec) {
  std::ostringstream out;
  const auto& d = spec.descriptor;
  out << "id: " << spec.id.str() << "\n"
      << "observation_space: " << to_text(d.observation_space) << "\n"
      << "action_space: " << to_text(d.action_space) << "\n"
      << "reward_range: [" << format_real(d.reward_range.first) << ", "
      << format_real(d.reward_range.second) << "]\n"
      << "max_episode_steps: "
      << (d.max_episode_steps ? std::to_string(*d.max_episode_steps) : "none") << "\n";
  if (spec.threshold) {
    out << "threshold: mean > " << format_real(spec.threshold->target)
        << " over " << spec.threshold->window << " episodes\n";
  } else {
    out << "threshold: none\n";
  }
  out << "config:";
  if (spec.config_schema.empty()) out << " none";
  out << "\n";
  for (const auto& [key, value] : spec.config_schema) {
    out << "  " << key << " (default " << value << ")\n";
  }
  return out.str();
}

}  // namespace gymkit::bench
