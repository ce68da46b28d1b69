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

#ifndef GYMKIT_MONITOR_HPP_
#define GYMKIT_MONITOR_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gymkit/env.hpp"

namespace gymkit {

inline constexpr std::int64_t kDefaultWindow = 100;

/// Windowed-average target that defines "solved" for an environment.
struct ThresholdSpec {
  double target;
  std::int64_t window = kDefaultWindow;
};

struct EpisodeRecord {
  std::int64_t index = 0;
  double total_reward = 0.0;
  std::int64_t length = 0;
  std::optional<std::uint64_t> seed;
  bool truncated = false;
  std::int64_t wall_time_ms = 0;

  bool operator==(const EpisodeRecord&) const = default;
};

struct Manifest {
  std::string env;
  /// Sorted by key.
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string obs_space;
  std::string act_space;
  std::uint64_t seed = 0;
  std::string toolkit_version;

  bool operator==(const Manifest&) const = default;
};

struct MonitorLog {
  Manifest manifest;
  std::vector<EpisodeRecord> episodes;

  std::vector<double> rewards() const;
  bool operator==(const MonitorLog&) const = default;
};

// Metrics. The span overloads take per-episode total rewards in order.

struct CurvePoint {
  std::int64_t episode;
  double mean;
  bool operator==(const CurvePoint&) const = default;
};

/// Trailing moving average; points start at episode window-1. Each window
/// is summed in episode order, so results are reproducible bit for bit.
std::vector<CurvePoint> learning_curve(std::span<const double> rewards,
                                       std::int64_t window);
std::vector<CurvePoint> learning_curve(const MonitorLog& log,
                                       std::int64_t window);

/// Number of episodes until the trailing window mean first strictly exceeds
/// the target, or nullopt if it never does. Partial windows never count.
std::optional<std::int64_t> episodes_to_threshold(
    std::span<const double> rewards, const ThresholdSpec& spec);
std::optional<std::int64_t> episodes_to_threshold(const MonitorLog& log,
                                                  const ThresholdSpec& spec);

double final_performance(std::span<const double> rewards, std::int64_t tail);
double final_performance(const MonitorLog& log, std::int64_t tail);

// Line-delimited log format: the manifest on line 1, one episode per line.

std::string serialize_manifest(const Manifest& manifest);
std::string serialize_record(const EpisodeRecord& record);
std::string serialize_log(const MonitorLog& log);
/// Throws kMalformedLog naming the 1-based offending line.
MonitorLog parse_log(std::string_view text);
MonitorLog read_log_file(const std::filesystem::path& path);
void write_log_file(const std::filesystem::path& path, const MonitorLog& log);

/// Environment wrapper that records every reset and step.
///
/// Behavior is transparent: outcomes are forwarded untouched. Each finished
/// episode becomes an EpisodeRecord; when a log file is attached the record
/// is appended and flushed immediately, so another process can tail it.
class Monitor : public Env {
 public:
  Monitor(std::unique_ptr<Env> inner, Manifest manifest);

  Value reset(std::optional<std::uint64_t> seed = std::nullopt) override;
  StepOutcome step(const Value& action) override;
  /// Also records the seed as the manifest's master seed.
  void seed(std::uint64_t seed) override;

  const EnvDescriptor& descriptor() const override {
    return inner_->descriptor();
  }
  EpisodePhase phase() const override { return inner_->phase(); }
  std::optional<std::uint64_t> episode_seed() const override {
    return inner_->episode_seed();
  }
  std::string render() const override { return inner_->render(); }

  /// Opens an episode; discards any unfinished one.
  void record_reset(std::optional<std::uint64_t> seed);
  /// Accumulates one step; throws kNoOpenEpisode without a prior reset.
  void record_step(const StepOutcome& outcome);

  /// Truncates `path`, writes the manifest and any episodes recorded so far,
  /// then keeps appending. Throws kIo when the file cannot be written.
  void attach_log(const std::filesystem::path& path);

  const MonitorLog& log() const { return log_; }
  Env& inner() { return *inner_; }

 private:
  struct OpenEpisode {
    double total_reward = 0.0;
    std::int64_t length = 0;
    std::optional<std::uint64_t> seed;
    std::chrono::steady_clock::time_point started;
  };

  std::unique_ptr<Env> inner_;
  MonitorLog log_;
  std::optional<OpenEpisode> open_;
  std::ofstream sink_;
};

}  // namespace gymkit

#endif  // GYMKIT_MONITOR_HPP_
