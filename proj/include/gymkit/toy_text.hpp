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

#ifndef GYMKIT_TOY_TEXT_HPP_
#define GYMKIT_TOY_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gymkit/env.hpp"

namespace gymkit::toy_text {

enum class Cell : char { kStart = 'S', kFrozen = 'F', kHole = 'H', kGoal = 'G' };

enum LakeAction : std::int64_t { kLeft = 0, kDown = 1, kRight = 2, kUp = 3 };

inline constexpr const char* kDefaultLakeMap = "SFFF,FHFH,FFFH,HFFG";
inline constexpr std::int64_t kLakeMaxSteps = 100;

/// Rectangular grid of cells, row-major.
class LakeMap {
 public:
  /// Parses comma-separated rows. Throws kInvalidConfigValue for ragged rows,
  /// unknown characters, or a start/goal count other than one start and at
  /// least one goal.
  static LakeMap parse(std::string_view rows);
  static LakeMap default_map() { return parse(kDefaultLakeMap); }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t size() const { return rows_ * cols_; }
  Cell at(std::int64_t cell) const { return cells_[static_cast<std::size_t>(cell)]; }
  std::int64_t start() const { return start_; }
  bool is_absorbing(std::int64_t cell) const {
    return at(cell) == Cell::kHole || at(cell) == Cell::kGoal;
  }
  /// Cell reached by moving from `cell` in `direction`; off-grid is a no-op.
  std::int64_t move(std::int64_t cell, std::int64_t direction) const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::int64_t start_ = 0;
  std::vector<Cell> cells_;
};

struct LakeOutcome {
  double probability;
  std::int64_t next;
  double reward;
  bool done;
};

/// Exact transition kernel. Slippery: the intended direction and each
/// perpendicular one with probability 1/3, never backwards. Outcomes are not
/// merged, so wall no-ops may appear as repeated self-transitions. Holes and
/// goals are absorbing and yield an empty list.
std::vector<LakeOutcome> lake_transition_kernel(const LakeMap& map,
                                                std::int64_t cell,
                                                std::int64_t action,
                                                bool slippery);

/// Samples one kernel outcome.
LakeOutcome frozenlake_step(const LakeMap& map, std::int64_t cell,
                            std::int64_t action, bool slippery, Rng& rng);

/// Optimal success probability from every cell, ignoring the step cap
/// (undiscounted value iteration on the exact kernel).
std::vector<double> optimal_success_probability(const LakeMap& map,
                                                bool slippery,
                                                double tolerance = 1e-12);

class FrozenLakeEnv : public EnvBase {
 public:
  explicit FrozenLakeEnv(LakeMap map = LakeMap::default_map(),
                         bool slippery = true);

  std::string render() const override;
  const LakeMap& map() const { return map_; }
  std::int64_t cell() const { return cell_; }

 protected:
  Value on_reset(Rng& rng) override;
  StepOutcome on_step(const Value& action, Rng& rng) override;

 private:
  LakeMap map_;
  bool slippery_;
  std::int64_t cell_ = 0;
};

}  // namespace gymkit::toy_text

#endif  // GYMKIT_TOY_TEXT_HPP_
