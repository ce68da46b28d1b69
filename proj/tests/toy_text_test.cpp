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

#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "gymkit/error.hpp"

namespace gymkit::toy_text {
namespace {

TEST(FrozenLakeTest, DeterministicMoves) {
  const auto map = LakeMap::default_map();
  const auto right = lake_transition_kernel(map, 0, kRight, false);
  ASSERT_EQ(right.size(), 1u);
  EXPECT_EQ(right[0].next, 1);
  EXPECT_EQ(right[0].reward, 0.0);
  EXPECT_FALSE(right[0].done);

  const auto goal = lake_transition_kernel(map, 14, kRight, false);
  ASSERT_EQ(goal.size(), 1u);
  EXPECT_EQ(goal[0].next, 15);
  EXPECT_EQ(goal[0].reward, 1.0);
  EXPECT_TRUE(goal[0].done);

  const auto hole = lake_transition_kernel(map, 1, kDown, false);
  EXPECT_EQ(hole[0].next, 5);
  EXPECT_EQ(hole[0].reward, 0.0);
  EXPECT_TRUE(hole[0].done);
}

TEST(FrozenLakeTest, EnvDeterministicVariant) {
  FrozenLakeEnv env(LakeMap::default_map(), false);
  env.reset(0);
  const auto o = env.step(int_value(kRight));
  EXPECT_EQ(o.observation, int_value(1));
  EXPECT_EQ(o.reward, 0.0);
  EXPECT_FALSE(o.done);
}

TEST(FrozenLakeTest, KernelIsNormalized) {
  const auto map = LakeMap::default_map();
  for (std::int64_t s = 0; s < map.size(); ++s) {
    for (std::int64_t a = 0; a < 4; ++a) {
      for (bool slippery : {true, false}) {
        const auto outcomes = lake_transition_kernel(map, s, a, slippery);
        if (map.is_absorbing(s)) {
          EXPECT_TRUE(outcomes.empty());
          continue;
        }
        const double total = std::accumulate(outcomes.begin(), outcomes.end(), 0.0,
                                             [](double acc, const LakeOutcome& o) { return acc + o.probability; });
        EXPECT_NEAR(total, 1.0, 1e-15);
        EXPECT_LE(outcomes.size(), 3u);
      }
    }
  }
}

TEST(FrozenLakeTest, CornerLeftIncludesSelfTransitions) {
  const auto outcomes = lake_transition_kernel(LakeMap::default_map(), 0, kLeft, true);
  ASSERT_EQ(outcomes.size(), 3u);
  // Order is Up, Left, Down. Up and Left hit walls; Down reaches cell 4.
  EXPECT_EQ(outcomes[0].next, 0);
  EXPECT_EQ(outcomes[1].next, 0);
  EXPECT_EQ(outcomes[2].next, 4);
}

TEST(FrozenLakeTest, SlipSetIsIntendedPlusPerpendiculars) {
  // Cell 6 is row 1, col 2. Down -> 10, Left -> 5 (hole), Right -> 7 (hole).
  const auto outcomes = lake_transition_kernel(LakeMap::default_map(), 6, kDown, true);
  ASSERT_EQ(outcomes.size(), 3u);
  std::map<std::int64_t, double> by_next;
  for (const auto& o : outcomes) {
    EXPECT_DOUBLE_EQ(o.probability, 1.0 / 3.0);
    by_next[o.next] += o.probability;
  }
  EXPECT_EQ(by_next.size(), 3u);
  EXPECT_TRUE(by_next.count(10) && by_next.count(5) && by_next.count(7));
}

TEST(FrozenLakeTest, SampledFrequenciesMatchKernel) {
  const auto map = LakeMap::default_map();
  Rng rng(99);
  constexpr int kTrials = 300000;
  std::map<std::int64_t, int> counts;
  for (int i = 0; i < kTrials; ++i) ++counts[frozenlake_step(map, 0, kDown, true, rng).next];
  // Down -> 4, Left -> wall no-op (0), Right -> 1.
  EXPECT_NEAR(counts[4] / static_cast<double>(kTrials), 1.0 / 3.0, 0.01);
  EXPECT_NEAR(counts[0] / static_cast<double>(kTrials), 1.0 / 3.0, 0.01);
  EXPECT_NEAR(counts[1] / static_cast<double>(kTrials), 1.0 / 3.0, 0.01);
}

TEST(FrozenLakeTest, EpisodeRewardIsZeroOrOne) {
  FrozenLakeEnv env;
  env.seed(3);
  Rng rng(4);
  for (int e = 0; e < 500; ++e) {
    env.reset();
    double total = 0.0;
    StepOutcome o;
    do {
      o = env.step(int_value(static_cast<std::int64_t>(rng.uniform_index(4))));
      total += o.reward;
      if (o.reward == 1.0) EXPECT_EQ(o.observation, int_value(15));
    } while (!o.done);
    EXPECT_TRUE(total == 0.0 || total == 1.0);
  }
}

// Independent undiscounted value iteration for the default 4x4 map gives
// 14/17 from the start cell.
TEST(FrozenLakeTest, OptimalSuccessProbability) {
  const auto values = optimal_success_probability(LakeMap::default_map(), true);
  EXPECT_NEAR(values[0], 14.0 / 17.0, 1e-10);
  EXPECT_EQ(values[5], 0.0);
  const auto deterministic = optimal_success_probability(LakeMap::default_map(), false);
  EXPECT_NEAR(deterministic[0], 1.0, 1e-12);
}

TEST(FrozenLakeTest, MapValidation) {
  EXPECT_THROW(LakeMap::parse("SF,FFF"), Error);
  EXPECT_THROW(LakeMap::parse("FF,FG"), Error);
  EXPECT_THROW(LakeMap::parse("SS,FG"), Error);
  EXPECT_THROW(LakeMap::parse("SF,FF"), Error);
  EXPECT_THROW(LakeMap::parse("SX,FG"), Error);
  EXPECT_THROW(LakeMap::parse(""), Error);
  const auto m = LakeMap::parse("FFS,GHF");
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_EQ(m.start(), 2);
  FrozenLakeEnv env(m, false);
  EXPECT_EQ(env.reset(0), int_value(2));
  EXPECT_EQ(env.descriptor().observation_space, Space::discrete(6));
}

TEST(FrozenLakeTest, RenderBracketsAgent) {
  FrozenLakeEnv env;
  env.reset(0);
  EXPECT_EQ(env.render(), "[S]FFF\nFHFH\nFFFH\nHFFG\n");
}

}  // namespace
}  // namespace gymkit::toy_text
