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

#include "gymkit/monitor.hpp"

#include <algorithm>
#include <sstream>

#include "gymkit/error.hpp"
#include "json.hpp"

namespace gymkit {

using nlohmann::json;

std::vector<double> MonitorLog::rewards() const {
  std::vector<double> out;
  out.reserve(episodes.size());
  for (const auto& e : episodes) out.push_back(e.total_reward);
  return out;
}

std::vector<CurvePoint> learning_curve(std::span<const double> rewards,
                                       std::int64_t window) {
  if (window < 1) {
    throw Error(ErrorKind::kInvalidArgument, "window must be >= 1");
  }
  if (rewards.empty()) throw Error(ErrorKind::kEmptyLog, "no episodes");
  const auto n = static_cast<std::int64_t>(rewards.size());
  std::vector<CurvePoint> curve;
  if (n < window) return curve;
  curve.reserve(static_cast<std::size_t>(n - window + 1));
  // Each window is summed afresh so the mean does not accumulate drift from
  // a running sum over long logs.
  for (std::int64_t end = window - 1; end < n; ++end) {
    double sum = 0.0;
    for (std::int64_t i = end - window + 1; i <= end; ++i) sum += rewards[i];
    curve.push_back({end, sum / static_cast<double>(window)});
  }
  return curve;
}

std::vector<CurvePoint> learning_curve(const MonitorLog& log,
                                       std::int64_t window) {
  const auto r = log.rewards();
  return learning_curve(r, window);
}

std::optional<std::int64_t> episodes_to_threshold(
    std::span<const double> rewards, const ThresholdSpec& spec) {
  if (spec.window < 1) {
    throw Error(ErrorKind::kInvalidArgument, "window must be >= 1");
  }
  if (rewards.empty()) return std::nullopt;
  for (const auto& point : learning_curve(rewards, spec.window)) {
    if (point.mean > spec.target) return point.episode + 1;
  }
  return std::nullopt;
}

std::optional<std::int64_t> episodes_to_threshold(const MonitorLog& log,
                                                  const ThresholdSpec& spec) {
  const auto r = log.rewards();
  return episodes_to_threshold(r, spec);
}

double final_performance(std::span<const double> rewards, std::int64_t tail) {
  if (tail < 1 || static_cast<std::int64_t>(rewards.size()) < tail) {
    throw Error(ErrorKind::kInsufficientEpisodes,
                "need " + std::to_string(tail) + " episodes, log has " +
                    std::to_string(rewards.size()));
  }
  double sum = 0.0;
  for (auto it = rewards.end() - tail; it != rewards.end(); ++it) sum += *it;
  return sum / static_cast<double>(tail);
}

double final_performance(const MonitorLog& log, std::int64_t tail) {
  const auto r = log.rewards();
  return final_performance(r, tail);
}

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kMalformedLog,
              "line " + std::to_string(line) + ": " + what);
}

const json& field(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(line, std::string("missing key '") + key + "'");
  return *it;
}

void expect_keys(const json& obj, std::size_t count, std::size_t line) {
  if (obj.size() != count) malformed(line, "unexpected keys");
}

std::string string_field(const json& obj, const char* key, std::size_t line) {
  const json& v = field(obj, key, line);
  if (!v.is_string()) malformed(line, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const json& obj, const char* key, std::size_t line) {
  const json& v = field(obj, key, line);
  if (!v.is_number_integer()) {
    malformed(line, std::string("'") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::uint64_t seed_value(const json& v, const char* key, std::size_t line) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    malformed(line, std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

Manifest parse_manifest(const json& obj, std::size_t line) {
  if (!obj.is_object()) malformed(line, "manifest must be an object");
  expect_keys(obj, 6, line);
  Manifest m;
  m.env = string_field(obj, "env", line);
  const json& overrides = field(obj, "overrides", line);
  if (!overrides.is_object()) malformed(line, "'overrides' must be an object");
  for (const auto& [key, value] : overrides.items()) {
    if (!value.is_string()) malformed(line, "override values must be strings");
    m.overrides.emplace_back(key, value.get<std::string>());
  }
  std::sort(m.overrides.begin(), m.overrides.end());
  m.obs_space = string_field(obj, "obs_space", line);
  m.act_space = string_field(obj, "act_space", line);
  m.seed = seed_value(field(obj, "seed", line), "seed", line);
  m.toolkit_version = string_field(obj, "toolkit_version", line);
  return m;
}

EpisodeRecord parse_record(const json& obj, std::size_t line) {
  if (!obj.is_object()) malformed(line, "record must be an object");
  expect_keys(obj, 6, line);
  EpisodeRecord r;
  r.index = int_field(obj, "ep", line);
  const json& reward = field(obj, "r", line);
  if (!reward.is_number()) malformed(line, "'r' must be a number");
  r.total_reward = reward.get<double>();
  r.length = int_field(obj, "len", line);
  const json& trunc = field(obj, "trunc", line);
  if (!trunc.is_boolean()) malformed(line, "'trunc' must be a boolean");
  r.truncated = trunc.get<bool>();
  const json& seed = field(obj, "seed", line);
  if (!seed.is_null()) r.seed = seed_value(seed, "seed", line);
  r.wall_time_ms = int_field(obj, "ms", line);
  if (r.length < 1) malformed(line, "'len' must be >= 1");
  if (r.wall_time_ms < 0) malformed(line, "'ms' must be >= 0");
  return r;
}

}  // namespace

std::string serialize_manifest(const Manifest& m) {
  std::string overrides = "{";
  for (std::size_t i = 0; i < m.overrides.size(); ++i) {
    if (i > 0) overrides += ", ";
    overrides += quoted(m.overrides[i].first) + ": " + quoted(m.overrides[i].second);
  }
  overrides += "}";
  return "{\"env\": " + quoted(m.env) + ", \"overrides\": " + overrides +
         ", \"obs_space\": " + quoted(m.obs_space) +
         ", \"act_space\": " + quoted(m.act_space) +
         ", \"seed\": " + std::to_string(m.seed) +
         ", \"toolkit_version\": " + quoted(m.toolkit_version) + "}";
}

std::string serialize_record(const EpisodeRecord& r) {
  return "{\"ep\": " + std::to_string(r.index) +
         ", \"r\": " + format_real(r.total_reward) +
         ", \"len\": " + std::to_string(r.length) +
         ", \"trunc\": " + (r.truncated ? "true" : "false") +
         ", \"seed\": " + (r.seed ? std::to_string(*r.seed) : "null") +
         ", \"ms\": " + std::to_string(r.wall_time_ms) + "}";
}

std::string serialize_log(const MonitorLog& log) {
  std::string out = serialize_manifest(log.manifest) + "\n";
  for (const auto& r : log.episodes) out += serialize_record(r) + "\n";
  return out;
}

MonitorLog parse_log(std::string_view text) {
  MonitorLog log;
  std::size_t line_no = 0;
  bool have_manifest = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty()) malformed(line_no, "empty line");
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      malformed(line_no, e.what());
    }
    if (!have_manifest) {
      log.manifest = parse_manifest(obj, line_no);
      have_manifest = true;
      continue;
    }
    auto record = parse_record(obj, line_no);
    if (record.index != static_cast<std::int64_t>(log.episodes.size())) {
      malformed(line_no, "episode indices must be contiguous from 0");
    }
    log.episodes.push_back(record);
  }
  if (!have_manifest) malformed(1, "missing manifest");
  return log;
}

MonitorLog read_log_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_log(buf.str());
}

void write_log_file(const std::filesystem::path& path, const MonitorLog& log) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << serialize_log(log);
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

Monitor::Monitor(std::unique_ptr<Env> inner, Manifest manifest)
    : inner_(std::move(inner)) {
  std::sort(manifest.overrides.begin(), manifest.overrides.end());
  log_.manifest = std::move(manifest);
}

Value Monitor::reset(std::optional<std::uint64_t> seed) {
  Value observation = inner_->reset(seed);
  record_reset(inner_->episode_seed());
  return observation;
}

StepOutcome Monitor::step(const Value& action) {
  StepOutcome outcome = inner_->step(action);
  record_step(outcome);
  return outcome;
}

void Monitor::seed(std::uint64_t seed) {
  log_.manifest.seed = seed;
  inner_->seed(seed);
}

void Monitor::record_reset(std::optional<std::uint64_t> seed) {
  open_ = OpenEpisode{0.0, 0, seed, std::chrono::steady_clock::now()};
}

void Monitor::record_step(const StepOutcome& outcome) {
  if (!open_) {
    throw Error(ErrorKind::kNoOpenEpisode, "record_step without a reset");
  }
  open_->total_reward += outcome.reward;
  ++open_->length;
  if (!outcome.done) return;

  const auto elapsed = std::chrono::steady_clock::now() - open_->started;
  EpisodeRecord record;
  record.index = static_cast<std::int64_t>(log_.episodes.size());
  record.total_reward = open_->total_reward;
  record.length = open_->length;
  record.seed = open_->seed;
  record.truncated = outcome.truncated();
  record.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  log_.episodes.push_back(record);
  open_.reset();
  if (sink_.is_open()) {
    sink_ << serialize_record(record) << '\n';
    sink_.flush();
    if (!sink_) throw Error(ErrorKind::kIo, "monitor log write failed");
  }
}

void Monitor::attach_log(const std::filesystem::path& path) {
  sink_ = std::ofstream(path, std::ios::binary | std::ios::trunc);
  if (!sink_) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  sink_ << serialize_log(log_);
  sink_.flush();
  if (!sink_) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

}  // namespace gymkit
