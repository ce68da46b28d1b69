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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gymkit/error.hpp"
#include "gymkit/registry.hpp"
#include "support/oracles.hpp"

namespace gymkit {
namespace {

const Registry& reg() { return builtin_registry(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::kInvalidArgument;
}

TEST(EnvTest, ResetWithSeedIsDeterministic) {
  auto env = reg().make_unmonitored(parse_id("CartPole-v0"));
  const auto first = env->reset(7);
  const auto second = env->reset(7);
  EXPECT_EQ(first, second);
}

TEST(EnvTest, FrozenLakeStartsAtCellZero) {
  auto env = reg().make_unmonitored(parse_id("FrozenLake-v0"));
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) EXPECT_EQ(env->reset(seed), int_value(0));
}

TEST(EnvTest, CopyObservationIsInSpace) {
  auto env = reg().make_unmonitored(parse_id("Copy-v0"), {{"length", "5"}});
  EXPECT_EQ(env->descriptor().observation_space, Space::discrete(6));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(contains(env->descriptor().observation_space, env->reset(seed)));
  }
}

TEST(EnvTest, StepBeforeResetIsIllegal) {
  auto env = reg().make_unmonitored(parse_id("CartPole-v0"));
  EXPECT_EQ(env->phase(), EpisodePhase::kNeedsReset);
  EXPECT_EQ(kind_of([&] { env->step(int_value(0)); }), ErrorKind::kIllegalPhase);
}

TEST(EnvTest, StepAfterDoneIsIllegal) {
  auto env = reg().make_unmonitored(parse_id("CartPole-v0"));
  env->reset(1);
  StepOutcome outcome;
  do {
    outcome = env->step(int_value(1));
  } while (!outcome.done);
  EXPECT_EQ(env->phase(), EpisodePhase::kTerminal);
  EXPECT_EQ(kind_of([&] { env->step(int_value(1)); }), ErrorKind::kIllegalPhase);
  env->reset();
  EXPECT_EQ(env->phase(), EpisodePhase::kInProgress);
  EXPECT_NO_THROW(env->step(int_value(1)));
}

TEST(EnvTest, InvalidActionsAreHardErrors) {
  auto cartpole = reg().make_unmonitored(parse_id("CartPole-v0"));
  cartpole->reset(0);
  EXPECT_EQ(kind_of([&] { cartpole->step(int_value(2)); }), ErrorKind::kInvalidAction);
  EXPECT_EQ(kind_of([&] { cartpole->step(vector_value({1.0})); }), ErrorKind::kInvalidAction);
  // The episode is untouched by a rejected action.
  EXPECT_EQ(cartpole->phase(), EpisodePhase::kInProgress);

  auto pendulum = reg().make_unmonitored(parse_id("Pendulum-v0"));
  pendulum->reset(0);
  EXPECT_EQ(kind_of([&] { pendulum->step(vector_value({2.5})); }), ErrorKind::kInvalidAction);
  EXPECT_NO_THROW(pendulum->step(vector_value({2.0})));
}

TEST(EnvTest, CartPoleTruncatesAtStepCap) {
  auto env = reg().make_unmonitored(parse_id("CartPole-v0"));
  auto obs = env->reset(3);
  int steps = 0;
  StepOutcome outcome;
  do {
    outcome = env->step(int_value(testing::balance_cartpole(as_vector(obs))));
    obs = outcome.observation;
    ++steps;
    if (steps < 200) ASSERT_FALSE(outcome.done) << "controller failed at step " << steps;
  } while (!outcome.done);
  EXPECT_EQ(steps, 200);
  EXPECT_TRUE(outcome.truncated());
  EXPECT_EQ(outcome.info.at("truncated"), "true");
}

TEST(EnvTest, NaturalTerminationIsNotTruncation) {
  auto env = reg().make_unmonitored(parse_id("CartPole-v0"));
  env->reset(3);
  StepOutcome outcome;
  do {
    outcome = env->step(int_value(0));
  } while (!outcome.done);
  EXPECT_FALSE(outcome.truncated());
  EXPECT_EQ(outcome.info.count("truncated"), 0u);
}

std::vector<std::string> trajectory(Env& env, std::uint64_t action_seed, int steps) {
  Rng rng(action_seed);
  std::vector<std::string> out;
  env.reset();
  for (int i = 0; i < steps; ++i) {
    if (env.phase() == EpisodePhase::kTerminal) env.reset();
    out.push_back(serialize_outcome(env.step(sample(env.descriptor().action_space, rng))));
  }
  return out;
}

TEST(EnvTest, EqualSeedsGiveEqualTrajectories) {
  for (const auto& id : reg().ids()) {
    auto a = reg().make_unmonitored(parse_id(id));
    auto b = reg().make_unmonitored(parse_id(id));
    a->seed(42);
    b->seed(42);
    EXPECT_EQ(trajectory(*a, 9, 500), trajectory(*b, 9, 500)) << id;
  }
}

TEST(EnvTest, DifferentSeedsGiveDifferentFrozenLakeTrajectories) {
  auto a = reg().make_unmonitored(parse_id("FrozenLake-v0"));
  auto b = reg().make_unmonitored(parse_id("FrozenLake-v0"));
  a->seed(1);
  b->seed(2);
  EXPECT_NE(trajectory(*a, 5, 100), trajectory(*b, 5, 100));
}

TEST(EnvTest, ExplicitResetSeedTakesPrecedence) {
  auto a = reg().make_unmonitored(parse_id("CartPole-v0"));
  auto b = reg().make_unmonitored(parse_id("CartPole-v0"));
  a->seed(1);
  b->seed(2);
  EXPECT_EQ(a->reset(77), b->reset(77));
  EXPECT_EQ(a->episode_seed(), 77u);
  // Unseeded resets still follow each env's own stream.
  EXPECT_NE(a->reset(), b->reset());
}

TEST(EnvTest, EpisodicContractHoldsForRandomPlay) {
  for (const auto& id : reg().ids()) {
    auto env = reg().make_unmonitored(parse_id(id));
    env->seed(11);
    Rng rng(12);
    const auto& d = env->descriptor();
    auto obs = env->reset();
    ASSERT_TRUE(contains(d.observation_space, obs)) << id;
    std::int64_t length = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto out = env->step(sample(d.action_space, rng));
      ++length;
      ASSERT_TRUE(contains(d.observation_space, out.observation)) << id;
      ASSERT_TRUE(std::isfinite(out.reward)) << id;
      ASSERT_GE(out.reward, d.reward_range.first) << id;
      ASSERT_LE(out.reward, d.reward_range.second) << id;
      if (d.max_episode_steps) ASSERT_LE(length, *d.max_episode_steps) << id;
      if (out.done) {
        env->reset();
        length = 0;
      }
    }
  }
}

TEST(EnvTest, EveryEnvRenders) {
  for (const auto& id : reg().ids()) {
    auto env = reg().make_unmonitored(parse_id(id));
    env->reset(0);
    EXPECT_FALSE(env->render().empty()) << id;
  }
}

}  // namespace
}  // namespace gymkit
