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

#ifndef GYMKIT_ENV_HPP_
#define GYMKIT_ENV_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gymkit/rng.hpp"
#include "gymkit/spaces.hpp"

namespace gymkit {

/// Diagnostic key/value pairs attached to a step. Agents must not branch on it.
using Info = std::map<std::string, std::string>;

inline constexpr const char* kTruncatedKey = "truncated";

struct StepOutcome {
  Value observation;
  double reward = 0.0;
  bool done = false;
  Info info;

  bool truncated() const {
    auto it = info.find(kTruncatedKey);
    return it != info.end() && it->second == "true";
  }
};

struct EnvDescriptor {
  Space observation_space;
  Space action_space;
  std::pair<double, double> reward_range;
  std::optional<std::int64_t> max_episode_steps;
};

enum class EpisodePhase { kNeedsReset, kInProgress, kTerminal };

/// The environment interface: reset, step, seed. Instances are single-owner.
class Env {
 public:
  virtual ~Env() = default;

  /// Starts an episode. An explicit seed fixes the episode's randomness for
  /// that episode only; otherwise an episode seed is drawn from the stream set
  /// by seed().
  virtual Value reset(std::optional<std::uint64_t> seed = std::nullopt) = 0;

  /// Advances one step. Throws kIllegalPhase unless an episode is in
  /// progress, and kInvalidAction for actions outside the action space.
  virtual StepOutcome step(const Value& action) = 0;

  /// Re-keys the ambient stream from which unseeded resets draw.
  virtual void seed(std::uint64_t seed) = 0;

  virtual const EnvDescriptor& descriptor() const = 0;
  virtual EpisodePhase phase() const = 0;
  /// Seed actually used by the current (or last) episode.
  virtual std::optional<std::uint64_t> episode_seed() const = 0;
  virtual std::string render() const = 0;
};

/// Implements the phase machine, action validation, seeding and step caps so
/// that concrete environments only supply dynamics.
class EnvBase : public Env {
 public:
  Value reset(std::optional<std::uint64_t> seed = std::nullopt) final;
  StepOutcome step(const Value& action) final;
  void seed(std::uint64_t seed) final { ambient_ = Rng(seed); }

  const EnvDescriptor& descriptor() const final { return descriptor_; }
  EpisodePhase phase() const final { return phase_; }
  std::optional<std::uint64_t> episode_seed() const final {
    return episode_seed_;
  }
  std::int64_t elapsed_steps() const { return elapsed_; }

 protected:
  explicit EnvBase(EnvDescriptor descriptor)
      : descriptor_(std::move(descriptor)) {}

  /// Samples a fresh initial state and returns the first observation.
  virtual Value on_reset(Rng& rng) = 0;
  /// Applies a validated action. Truncation is handled by the caller.
  virtual StepOutcome on_step(const Value& action, Rng& rng) = 0;

  EnvDescriptor& mutable_descriptor() { return descriptor_; }

 private:
  EnvDescriptor descriptor_;
  EpisodePhase phase_ = EpisodePhase::kNeedsReset;
  Rng ambient_{0};
  Rng episode_rng_{0};
  std::optional<std::uint64_t> episode_seed_;
  std::int64_t elapsed_ = 0;
};

/// One-line canonical text of a step, used for byte-level trajectory
/// comparisons.
std::string serialize_outcome(const StepOutcome& outcome);

}  // namespace gymkit

#endif  // GYMKIT_ENV_HPP_
