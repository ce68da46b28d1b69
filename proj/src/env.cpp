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

#include "gymkit/env.hpp"

#include <cmath>

#include "gymkit/error.hpp"

namespace gymkit {

Value EnvBase::reset(std::optional<std::uint64_t> seed) {
  const std::uint64_t episode_seed = seed ? *seed : ambient_.next_u64();
  episode_seed_ = episode_seed;
  episode_rng_ = Rng(episode_seed);
  elapsed_ = 0;
  Value observation = on_reset(episode_rng_);
  phase_ = EpisodePhase::kInProgress;
  return observation;
}

StepOutcome EnvBase::step(const Value& action) {
  if (phase_ == EpisodePhase::kNeedsReset) {
    throw Error(ErrorKind::kIllegalPhase, "step called before reset");
  }
  if (phase_ == EpisodePhase::kTerminal) {
    throw Error(ErrorKind::kIllegalPhase,
                "step called after the episode ended; call reset first");
  }
  if (!contains(descriptor_.action_space, action)) {
    throw Error(ErrorKind::kInvalidAction,
                "action " + format_value(action) + " is not in " +
                    to_text(descriptor_.action_space));
  }
  StepOutcome outcome = on_step(action, episode_rng_);
  ++elapsed_;
  if (!outcome.done && descriptor_.max_episode_steps &&
      elapsed_ >= *descriptor_.max_episode_steps) {
    outcome.done = true;
    outcome.info[kTruncatedKey] = "true";
  }
  if (outcome.done) phase_ = EpisodePhase::kTerminal;
  return outcome;
}

std::string serialize_outcome(const StepOutcome& outcome) {
  std::string out = "ob=" + format_value(outcome.observation) +
                    " r=" + format_real(outcome.reward) +
                    " done=" + (outcome.done ? "1" : "0");
  for (const auto& [key, value] : outcome.info) {
    out += " " + key + "=" + value;
  }
  return out;
}

}  // namespace gymkit
