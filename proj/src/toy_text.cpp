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

#include "gymkit/toy_text.hpp"

#include <algorithm>
#include <cmath>

#include "gymkit/error.hpp"

namespace gymkit::toy_text {

LakeMap LakeMap::parse(std::string_view rows) {
  LakeMap map;
  std::int64_t starts = 0;
  std::int64_t goals = 0;
  while (true) {
    const auto comma = rows.find(',');
    const auto row = rows.substr(0, comma);
    if (row.empty() ||
        (map.rows_ > 0 && static_cast<std::int64_t>(row.size()) != map.cols_)) {
      throw Error(ErrorKind::kInvalidConfigValue,
                  "lake map rows must be nonempty and of equal width");
    }
    map.cols_ = static_cast<std::int64_t>(row.size());
    for (char c : row) {
      switch (c) {
        case 'S':
          ++starts;
          map.start_ = static_cast<std::int64_t>(map.cells_.size());
          break;
        case 'G': ++goals; break;
        case 'F':
        case 'H': break;
        default:
          throw Error(ErrorKind::kInvalidConfigValue,
                      std::string("unknown lake cell '") + c + "'");
      }
      map.cells_.push_back(static_cast<Cell>(c));
    }
    ++map.rows_;
    if (comma == std::string_view::npos) break;
    rows.remove_prefix(comma + 1);
  }
  if (starts != 1 || goals < 1) {
    throw Error(ErrorKind::kInvalidConfigValue,
                "lake map needs exactly one S and at least one G");
  }
  return map;
}

std::int64_t LakeMap::move(std::int64_t cell, std::int64_t direction) const {
  std::int64_t row = cell / cols_;
  std::int64_t col = cell % cols_;
  switch (direction) {
    case kLeft: col = std::max<std::int64_t>(col - 1, 0); break;
    case kDown: row = std::min(row + 1, rows_ - 1); break;
    case kRight: col = std::min(col + 1, cols_ - 1); break;
    case kUp: row = std::max<std::int64_t>(row - 1, 0); break;
    default: break;
  }
  return row * cols_ + col;
}

namespace {

LakeOutcome land(const LakeMap& map, std::int64_t next, double probability) {
  const Cell c = map.at(next);
  return {probability, next, c == Cell::kGoal ? 1.0 : 0.0,
          c == Cell::kGoal || c == Cell::kHole};
}

}  // namespace

std::vector<LakeOutcome> lake_transition_kernel(const LakeMap& map,
                                                std::int64_t cell,
                                                std::int64_t action,
                                                bool slippery) {
  if (map.is_absorbing(cell)) return {};
  if (!slippery) return {land(map, map.move(cell, action), 1.0)};
  std::vector<LakeOutcome> out;
  out.reserve(3);
  for (std::int64_t offset : {-1, 0, 1}) {
    const std::int64_t direction = (action + offset + 4) % 4;
    out.push_back(land(map, map.move(cell, direction), 1.0 / 3.0));
  }
  return out;
}

LakeOutcome frozenlake_step(const LakeMap& map, std::int64_t cell,
                            std::int64_t action, bool slippery, Rng& rng) {
  const auto outcomes = lake_transition_kernel(map, cell, action, slippery);
  if (outcomes.empty()) {
    throw Error(ErrorKind::kIllegalPhase, "lake cell is absorbing");
  }
  if (outcomes.size() == 1) return outcomes.front();
  return outcomes[rng.uniform_index(outcomes.size())];
}

std::vector<double> optimal_success_probability(const LakeMap& map,
                                                bool slippery,
                                                double tolerance) {
  std::vector<double> value(static_cast<std::size_t>(map.size()), 0.0);
  while (true) {
    double delta = 0.0;
    for (std::int64_t s = 0; s < map.size(); ++s) {
      if (map.is_absorbing(s)) continue;
      double best = 0.0;
      for (std::int64_t a = 0; a < 4; ++a) {
        double q = 0.0;
        for (const auto& o : lake_transition_kernel(map, s, a, slippery)) {
          q += o.probability *
               (o.reward + (o.done ? 0.0 : value[static_cast<std::size_t>(o.next)]));
        }
        best = std::max(best, q);
      }
      delta = std::max(delta, std::abs(best - value[static_cast<std::size_t>(s)]));
      value[static_cast<std::size_t>(s)] = best;
    }
    if (delta < tolerance) break;
  }
  return value;
}

FrozenLakeEnv::FrozenLakeEnv(LakeMap map, bool slippery)
    : EnvBase(EnvDescriptor{Space::discrete(map.size()), Space::discrete(4),
                            {0.0, 1.0}, kLakeMaxSteps}),
      map_(std::move(map)),
      slippery_(slippery) {}

Value FrozenLakeEnv::on_reset(Rng&) {
  cell_ = map_.start();
  return int_value(cell_);
}

StepOutcome FrozenLakeEnv::on_step(const Value& action, Rng& rng) {
  const auto o = frozenlake_step(map_, cell_, as_int(action), slippery_, rng);
  cell_ = o.next;
  return {int_value(cell_), o.reward, o.done, {}};
}

std::string FrozenLakeEnv::render() const {
  std::string out;
  for (std::int64_t r = 0; r < map_.rows(); ++r) {
    for (std::int64_t c = 0; c < map_.cols(); ++c) {
      const std::int64_t cell = r * map_.cols() + c;
      const char symbol = static_cast<char>(map_.at(cell));
      if (cell == cell_) {
        out += '[';
        out += symbol;
        out += ']';
      } else {
        out += symbol;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace gymkit::toy_text
