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

#ifndef GYMKIT_ALGORITHMIC_HPP_
#define GYMKIT_ALGORITHMIC_HPP_

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "gymkit/env.hpp"

namespace gymkit::algorithmic {

enum class Task { kCopy, kReverse, kAdd };

enum class Move : std::int64_t { kLeft = 0, kRight = 1, kUp = 2, kDown = 3 };

/// One tape action. `symbol` is ignored unless `write` is set.
struct AlgoAction {
  Move move = Move::kRight;
  bool write = false;
  std::int64_t symbol = 0;
  bool operator==(const AlgoAction&) const = default;
};

/// Copy and Reverse move along one row; Add also moves between its two rows.
std::int64_t move_count(Task task);
std::int64_t action_count(Task task, std::int64_t base);
/// Flat index ((move * 2) + write) * base + symbol, the env's Discrete action.
std::int64_t encode_action(Task task, std::int64_t base, const AlgoAction& action);
AlgoAction decode_action(Task task, std::int64_t base, std::int64_t index);

/// Input rows: one for Copy/Reverse, two equal-length rows for Add.
using TapeRows = std::vector<std::vector<std::int64_t>>;

/// Copy: the input. Reverse: the input reversed. Add: the digit-wise sum of
/// the two least-significant-digit-first rows in `base`, one digit longer
/// than the input.
std::vector<std::int64_t> algo_target(Task task, const TapeRows& input,
                                      std::int64_t base);

inline constexpr std::int64_t kPromotionWindow = 20;
inline constexpr std::int64_t kMaxLength = 30;
inline constexpr std::int64_t kMinLength = 2;

/// Promotes to length + 1 once the last kPromotionWindow episode rewards
/// average at least length - 0.5. Never shrinks, never exceeds kMaxLength,
/// and leaves the length alone until a full window is available.
std::int64_t curriculum_update(std::span<const double> recent_rewards,
                               std::int64_t length);

struct AlgoConfig {
  Task task = Task::kCopy;
  std::int64_t base = 5;
  std::int64_t length = kMinLength;
  bool curriculum = false;
};

inline std::int64_t step_limit(std::int64_t length) { return 10 * (length + 2); }

/// Tape environment. The agent observes only the symbol under its read head
/// (or the blank symbol `base` off the tape) and writes the target one
/// symbol at a time: +1 per correct symbol, -0.5 and termination on the first
/// wrong one, done without penalty once the whole target is written.
class AlgorithmicEnv : public EnvBase {
 public:
  explicit AlgorithmicEnv(AlgoConfig config);

  std::string render() const override;

  const AlgoConfig& config() const { return config_; }
  std::int64_t length() const { return config_.length; }
  const TapeRows& input() const { return input_; }
  const std::vector<std::int64_t>& target() const { return target_; }

 protected:
  Value on_reset(Rng& rng) override;
  StepOutcome on_step(const Value& action, Rng& rng) override;

 private:
  std::int64_t observe() const;

  AlgoConfig config_;
  TapeRows input_;
  std::vector<std::int64_t> target_;
  std::int64_t head_row_ = 0;
  std::int64_t head_col_ = 0;
  std::size_t cursor_ = 0;
  double episode_reward_ = 0.0;
  std::deque<double> history_;
};

}  // namespace gymkit::algorithmic

#endif  // GYMKIT_ALGORITHMIC_HPP_
