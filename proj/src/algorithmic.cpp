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

#include "gymkit/algorithmic.hpp"

#include <algorithm>
#include <numeric>

#include "gymkit/error.hpp"

namespace gymkit::algorithmic {

std::int64_t move_count(Task task) { return task == Task::kAdd ? 4 : 2; }

std::int64_t action_count(Task task, std::int64_t base) {
  return move_count(task) * 2 * base;
}

std::int64_t encode_action(Task task, std::int64_t base, const AlgoAction& a) {
  const auto move = static_cast<std::int64_t>(a.move);
  if (move < 0 || move >= move_count(task) || a.symbol < 0 || a.symbol >= base) {
    throw Error(ErrorKind::kInvalidAction, "tape action out of range");
  }
  return (move * 2 + (a.write ? 1 : 0)) * base + a.symbol;
}

AlgoAction decode_action(Task task, std::int64_t base, std::int64_t index) {
  if (index < 0 || index >= action_count(task, base)) {
    throw Error(ErrorKind::kInvalidAction, "tape action index out of range");
  }
  AlgoAction a;
  a.symbol = index % base;
  a.write = (index / base) % 2 == 1;
  a.move = static_cast<Move>(index / base / 2);
  return a;
}

std::vector<std::int64_t> algo_target(Task task, const TapeRows& input,
                                      std::int64_t base) {
  switch (task) {
    case Task::kCopy:
      return input.at(0);
    case Task::kReverse: {
      std::vector<std::int64_t> out = input.at(0);
      std::reverse(out.begin(), out.end());
      return out;
    }
    case Task::kAdd: {
      const auto& a = input.at(0);
      const auto& b = input.at(1);
      if (a.size() != b.size()) {
        throw Error(ErrorKind::kInvalidArgument, "addend rows differ in length");
      }
      std::vector<std::int64_t> out;
      out.reserve(a.size() + 1);
      std::int64_t carry = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t sum = a[i] + b[i] + carry;
        out.push_back(sum % base);
        carry = sum / base;
      }
      out.push_back(carry);
      return out;
    }
  }
  return {};
}

std::int64_t curriculum_update(std::span<const double> recent_rewards,
                               std::int64_t length) {
  if (length >= kMaxLength ||
      static_cast<std::int64_t>(recent_rewards.size()) < kPromotionWindow) {
    return length;
  }
  const auto window = recent_rewards.last(static_cast<std::size_t>(kPromotionWindow));
  const double mean = std::accumulate(window.begin(), window.end(), 0.0) /
                      static_cast<double>(kPromotionWindow);
  return mean >= static_cast<double>(length) - 0.5 ? length + 1 : length;
}

namespace {

EnvDescriptor make_descriptor(const AlgoConfig& c) {
  if (c.base < 2) {
    throw Error(ErrorKind::kInvalidConfigValue, "base must be >= 2");
  }
  if (c.length < 1 || c.length > kMaxLength) {
    throw Error(ErrorKind::kInvalidConfigValue,
                "length must be in [1, " + std::to_string(kMaxLength) + "]");
  }
  return EnvDescriptor{Space::discrete(c.base + 1),
                       Space::discrete(action_count(c.task, c.base)),
                       {-0.5, 1.0},
                       step_limit(c.length)};
}

}  // namespace

AlgorithmicEnv::AlgorithmicEnv(AlgoConfig config)
    : EnvBase(make_descriptor(config)), config_(config) {}

std::int64_t AlgorithmicEnv::observe() const {
  const auto& row = input_[static_cast<std::size_t>(head_row_)];
  if (head_col_ < 0 || head_col_ >= static_cast<std::int64_t>(row.size())) {
    return config_.base;
  }
  return row[static_cast<std::size_t>(head_col_)];
}

Value AlgorithmicEnv::on_reset(Rng& rng) {
  if (phase() == EpisodePhase::kTerminal) {
    history_.push_back(episode_reward_);
    if (static_cast<std::int64_t>(history_.size()) > kPromotionWindow) {
      history_.pop_front();
    }
  }
  if (config_.curriculum) {
    const std::vector<double> recent(history_.begin(), history_.end());
    const std::int64_t promoted = curriculum_update(recent, config_.length);
    if (promoted != config_.length) {
      config_.length = promoted;
      mutable_descriptor().max_episode_steps = step_limit(promoted);
      history_.clear();
    }
  }

  const std::size_t rows = config_.task == Task::kAdd ? 2 : 1;
  input_.assign(rows, std::vector<std::int64_t>(static_cast<std::size_t>(config_.length)));
  for (auto& row : input_) {
    for (auto& symbol : row) {
      symbol = static_cast<std::int64_t>(
          rng.uniform_index(static_cast<std::uint64_t>(config_.base)));
    }
  }
  target_ = algo_target(config_.task, input_, config_.base);
  head_row_ = 0;
  head_col_ = 0;
  cursor_ = 0;
  episode_reward_ = 0.0;
  return int_value(observe());
}

StepOutcome AlgorithmicEnv::on_step(const Value& action, Rng&) {
  const AlgoAction a = decode_action(config_.task, config_.base, as_int(action));
  const auto rows = static_cast<std::int64_t>(input_.size());
  switch (a.move) {
    case Move::kLeft: head_col_ = std::max<std::int64_t>(head_col_ - 1, -1); break;
    case Move::kRight: head_col_ = std::min(head_col_ + 1, config_.length); break;
    case Move::kUp: head_row_ = std::max<std::int64_t>(head_row_ - 1, 0); break;
    case Move::kDown: head_row_ = std::min(head_row_ + 1, rows - 1); break;
  }

  double reward = 0.0;
  bool done = false;
  if (a.write) {
    if (a.symbol == target_[cursor_]) {
      reward = 1.0;
      ++cursor_;
      done = cursor_ == target_.size();
    } else {
      reward = -0.5;
      done = true;
    }
  }
  episode_reward_ += reward;
  return {int_value(observe()), reward, done, {}};
}

std::string AlgorithmicEnv::render() const {
  std::string out;
  for (std::size_t r = 0; r < input_.size(); ++r) {
    out += "in" + std::to_string(r) + ":";
    for (std::int64_t c = -1; c <= config_.length; ++c) {
      const bool on_tape = c >= 0 && c < config_.length;
      const std::string symbol =
          on_tape ? std::to_string(input_[r][static_cast<std::size_t>(c)]) : "_";
      const bool head = static_cast<std::int64_t>(r) == head_row_ && c == head_col_;
      out += head ? " [" + symbol + "]" : " " + symbol;
    }
    out += '\n';
  }
  out += "out:";
  for (std::size_t i = 0; i < cursor_; ++i) out += " " + std::to_string(target_[i]);
  out += " ^ (" + std::to_string(cursor_) + "/" + std::to_string(target_.size()) + ")\n";
  return out;
}

}  // namespace gymkit::algorithmic
