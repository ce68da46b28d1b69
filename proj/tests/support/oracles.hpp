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

// Test-only reference implementations. Nothing here calls into the code it
// is used to check.

#ifndef GYMKIT_TESTS_SUPPORT_ORACLES_HPP_
#define GYMKIT_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gymkit/algorithmic.hpp"
#include "gymkit/env.hpp"

namespace gymkit::testing {

/// Every window mean, by direct summation from scratch in episode order
/// (the documented summation order, so results compare bit for bit).
inline std::vector<std::pair<std::int64_t, double>> brute_force_curve(
    const std::vector<double>& rewards, std::int64_t window) {
  std::vector<std::pair<std::int64_t, double>> out;
  for (std::int64_t end = 0; end < static_cast<std::int64_t>(rewards.size()); ++end) {
    if (end + 1 < window) continue;
    double sum = 0.0;
    for (std::int64_t k = window - 1; k >= 0; --k) sum += rewards[end - k];
    out.emplace_back(end, sum / static_cast<double>(window));
  }
  return out;
}

inline std::optional<std::int64_t> brute_force_threshold(
    const std::vector<double>& rewards, double target, std::int64_t window) {
  for (const auto& [end, mean] : brute_force_curve(rewards, window)) {
    if (mean > target) return end + 1;
  }
  return std::nullopt;
}

/// Little-endian digits -> integer.
inline std::uint64_t undigitize(const std::vector<std::int64_t>& digits,
                                std::int64_t base) {
  std::uint64_t value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value = value * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(*it);
  }
  return value;
}

/// Integer -> exactly `width` little-endian digits.
inline std::vector<std::int64_t> digitize(std::uint64_t value, std::int64_t base,
                                          std::size_t width) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < width; ++i) {
    out.push_back(static_cast<std::int64_t>(value % static_cast<std::uint64_t>(base)));
    value /= static_cast<std::uint64_t>(base);
  }
  return out;
}

/// Optimal tape policy that sees only observations, keeping its own memory.
/// Actions are encoded with the same flat layout the environment documents:
/// ((move * 2) + write) * base + symbol.
class ScriptedTapePolicy {
 public:
  ScriptedTapePolicy(algorithmic::Task task, std::int64_t base, std::int64_t length)
      : task_(task), base_(base), length_(length) {}

  std::int64_t act(std::int64_t observation) {
    using algorithmic::Move;
    switch (task_) {
      case algorithmic::Task::kCopy:
        return encode(Move::kRight, true, observation);
      case algorithmic::Task::kReverse:
        if (walked_ < length_ - 1) {
          ++walked_;
          return encode(Move::kRight, false, 0);
        }
        return encode(Move::kLeft, true, observation);
      case algorithmic::Task::kAdd:
        if (observation == base_) {
          // Past the last column: only the carry remains.
          return encode(Move::kRight, true, carry_);
        }
        if (on_top_) {
          top_digit_ = observation;
          on_top_ = false;
          return encode(Move::kDown, false, 0);
        } else {
          const std::int64_t sum = top_digit_ + observation + carry_;
          carry_ = sum / base_;
          on_top_ = true;
          // Writing while moving right lands on the next column's bottom
          // cell; the following Up restores the read order.
          pending_up_ = true;
          return encode(Move::kRight, true, sum % base_);
        }
    }
    return 0;
  }

  /// Add needs an Up after each column's write; call before act().
  bool wants_up() const { return task_ == algorithmic::Task::kAdd && pending_up_; }
  std::int64_t up() {
    pending_up_ = false;
    return encode(algorithmic::Move::kUp, false, 0);
  }

 private:
  std::int64_t encode(algorithmic::Move move, bool write, std::int64_t symbol) const {
    return ((static_cast<std::int64_t>(move) * 2) + (write ? 1 : 0)) * base_ + symbol;
  }

  algorithmic::Task task_;
  std::int64_t base_;
  std::int64_t length_;
  std::int64_t walked_ = 0;
  bool on_top_ = true;
  bool pending_up_ = false;
  std::int64_t top_digit_ = 0;
  std::int64_t carry_ = 0;
};

/// Plays one episode of a tape env with the scripted policy; returns the
/// episode return.
inline double play_scripted_episode(Env& env, algorithmic::Task task,
                                    std::int64_t base, std::int64_t length,
                                    std::uint64_t seed) {
  ScriptedTapePolicy policy(task, base, length);
  std::int64_t observation = std::get<std::int64_t>(env.reset(seed));
  double total = 0.0;
  while (true) {
    std::int64_t action = policy.wants_up() ? policy.up() : policy.act(observation);
    const auto outcome = env.step(Value{action});
    total += outcome.reward;
    observation = std::get<std::int64_t>(outcome.observation);
    if (outcome.done) break;
  }
  return total;
}

/// PD-style balancing controller for CartPole used to reach the step cap.
inline std::int64_t balance_cartpole(const std::vector<double>& obs) {
  return obs[2] + 0.5 * obs[3] + 0.01 * obs[0] + 0.1 * obs[1] > 0.0 ? 1 : 0;
}

}  // namespace gymkit::testing

#endif  // GYMKIT_TESTS_SUPPORT_ORACLES_HPP_
