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

#include "gymkit/classic_control.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gymkit/registry.hpp"

namespace gymkit::classic_control {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_rel(double actual, double expected, double tol = 1e-12) {
  EXPECT_LE(std::abs(actual - expected), tol * std::abs(expected))
      << "actual " << actual << " expected " << expected;
}

// At theta = 0 with F = +10 N the closed form reduces to
// theta_acc = -F / (M l (4/3 - m_p / M)) = -600/41 and
// x_acc = (F - m_p l theta_acc) / M = 400/41; one Euler step of 0.02 s then
// gives the rational values below.
TEST(CartPoleTest, UprightPushRightMatchesClosedForm) {
  const auto t = cartpole_step({0, 0, 0, 0}, 1);
  expect_rel(t.next.x_dot, 8.0 / 41.0);
  expect_rel(t.next.theta_dot, -12.0 / 41.0);
  expect_rel(t.next.x, 4.0 / 1025.0);
  expect_rel(t.next.theta, -6.0 / 1025.0);
  EXPECT_EQ(t.reward, 1.0);
  EXPECT_FALSE(t.done);
}

TEST(CartPoleTest, PushLeftIsTheMirrorImage) {
  const auto right = cartpole_step({0, 0, 0, 0}, 1);
  const auto left = cartpole_step({0, 0, 0, 0}, 0);
  EXPECT_EQ(left.next.x, -right.next.x);
  EXPECT_EQ(left.next.x_dot, -right.next.x_dot);
  EXPECT_EQ(left.next.theta, -right.next.theta);
  EXPECT_EQ(left.next.theta_dot, -right.next.theta_dot);
}

TEST(CartPoleTest, OutOfBoundsAngleTerminates) {
  EXPECT_TRUE(cartpole_step({0, 0, 0.21, 0}, 0).done);
  EXPECT_TRUE(cartpole_step({0, 0, 0.21, 0}, 1).done);
  EXPECT_TRUE(cartpole_step({2.5, 0, 0, 0}, 1).done);
  EXPECT_TRUE(cartpole_in_bounds({2.4, 0, 0.2094, 0}));
}

TEST(CartPoleTest, TrajectorySymmetryIsExact) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    CartPoleState a{};
    CartPoleState b{};
    for (int i = 0; i < 100; ++i) {
      const auto action = static_cast<std::int64_t>(rng.uniform_index(2));
      const auto ta = cartpole_step(a, action);
      const auto tb = cartpole_step(b, 1 - action);
      ASSERT_EQ(ta.next.x, -tb.next.x);
      ASSERT_EQ(ta.next.x_dot, -tb.next.x_dot);
      ASSERT_EQ(ta.next.theta, -tb.next.theta);
      ASSERT_EQ(ta.next.theta_dot, -tb.next.theta_dot);
      ASSERT_EQ(ta.done, tb.done);
      if (ta.done) break;
      a = ta.next;
      b = tb.next;
    }
  }
}

TEST(CartPoleTest, EpisodeRewardEqualsLength) {
  auto env = builtin_registry().make_unmonitored(parse_id("CartPole-v0"));
  env->seed(4);
  Rng rng(5);
  for (int e = 0; e < 50; ++e) {
    env->reset();
    double total = 0.0;
    std::int64_t length = 0;
    StepOutcome o;
    do {
      o = env->step(sample(env->descriptor().action_space, rng));
      total += o.reward;
      ++length;
    } while (!o.done);
    EXPECT_EQ(total, static_cast<double>(length));
  }
}

TEST(CartPoleTest, InitialStateIsSmall) {
  CartPoleEnv env;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto obs = as_vector(env.reset(seed));
    for (double v : obs) {
      EXPECT_GE(v, -0.05);
      EXPECT_LE(v, 0.05);
    }
  }
}

TEST(CartPoleTest, RenderFormat) {
  CartPoleEnv env;
  env.reset(0);
  env.step(int_value(1));
  const auto text = env.render();
  EXPECT_EQ(text.rfind("x=", 0), 0u);
  EXPECT_NE(text.find(" th="), std::string::npos);
  EXPECT_NE(text.find(" xd="), std::string::npos);
  EXPECT_NE(text.find(" thd="), std::string::npos);
}

// cos(1.5) = 0.070737201667702910088189851434... so the gravity term alone
// moves the car by -0.0025 * cos(1.5).
TEST(MountainCarTest, ValleyStepMatchesHandEvaluation) {
  const auto t = mountaincar_step({-0.5, 0.0}, 1);
  expect_rel(t.next.velocity, -1.768430041692572752e-4);
  expect_rel(t.next.position, -0.5001768430041692573);
  EXPECT_EQ(t.reward, -1.0);
  EXPECT_FALSE(t.done);
}

TEST(MountainCarTest, CrossingGoalTerminates) {
  const auto t = mountaincar_step({0.49, 0.07}, 2);
  EXPECT_TRUE(t.done);
  EXPECT_GE(t.next.position, 0.5);
  EXPECT_EQ(t.next.velocity, 0.07);
}

TEST(MountainCarTest, ValleyBottomIsStationaryUnderCoasting) {
  const auto t = mountaincar_step({-kPi / 6.0, 0.0}, 1);
  EXPECT_LT(std::abs(t.next.velocity), 1e-12);
}

TEST(MountainCarTest, LeftWallStopsTheCar) {
  const auto t = mountaincar_step({-1.19, -0.05}, 0);
  EXPECT_EQ(t.next.position, -1.2);
  EXPECT_EQ(t.next.velocity, 0.0);
}

TEST(MountainCarTest, StateStaysInBounds) {
  Rng rng(17);
  MountainCarState s{-0.5, 0.0};
  for (int i = 0; i < 100000; ++i) {
    const auto t = mountaincar_step(s, static_cast<std::int64_t>(rng.uniform_index(3)));
    ASSERT_GE(t.next.position, -1.2);
    ASSERT_LE(t.next.position, 0.6);
    ASSERT_GE(t.next.velocity, -0.07);
    ASSERT_LE(t.next.velocity, 0.07);
    s = t.done ? MountainCarState{rng.uniform(-0.6, -0.4), 0.0} : t.next;
  }
}

TEST(PendulumTest, UprightIsAFixedPoint) {
  const auto t = pendulum_step({0.0, 0.0}, 0.0);
  EXPECT_EQ(t.next.theta, 0.0);
  EXPECT_EQ(t.next.theta_dot, 0.0);
  EXPECT_EQ(t.reward, 0.0);
  EXPECT_FALSE(t.done);
}

TEST(PendulumTest, HangingIsAFixedPoint) {
  const auto t = pendulum_step({kPi, 0.0}, 0.0);
  EXPECT_LT(std::abs(t.next.theta_dot), 1e-12);
  expect_rel(t.reward, -kPi * kPi);
}

TEST(PendulumTest, QuarterTurnMatchesHandEvaluation) {
  // theta_acc = 15 sin(pi/2) = 15; 0.05 s steps.
  const auto t = pendulum_step({kPi / 2.0, 0.0}, 0.0);
  expect_rel(t.next.theta_dot, 0.75);
  expect_rel(t.next.theta, kPi / 2.0 + 0.0375);
}

TEST(PendulumTest, TorqueAndCostTerms) {
  const auto t = pendulum_step({0.0, 1.0}, 2.0);
  expect_rel(t.next.theta_dot, 1.0 + 6.0 * 0.05);
  expect_rel(t.reward, -(0.1 + 0.004));
}

TEST(PendulumTest, SpeedIsClamped) {
  const auto t = pendulum_step({kPi / 2.0, 7.9}, 2.0);
  EXPECT_EQ(t.next.theta_dot, 8.0);
}

TEST(PendulumTest, WrapAngleIsHalfOpen) {
  EXPECT_EQ(wrap_angle(kPi), kPi);
  EXPECT_EQ(wrap_angle(-kPi), kPi);
  EXPECT_EQ(wrap_angle(0.0), 0.0);
  expect_rel(wrap_angle(3.0 * kPi / 2.0), -kPi / 2.0);
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double w = wrap_angle(rng.uniform(-50.0, 50.0));
    ASSERT_GT(w, -kPi);
    ASSERT_LE(w, kPi);
  }
}

// Semi-implicit Euler keeps the energy error bounded. Measured maximum over
// the first 100 steps from a quarter turn: 4.528% of m*g*l, frozen below.
TEST(PendulumTest, EnergyDriftIsBounded) {
  PendulumState s{kPi / 2.0, 0.0};
  const double e0 = pendulum_energy(s);
  const double scale = pendulum::kMass * pendulum::kGravity * pendulum::kLength;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    s = pendulum_step(s, 0.0).next;
    worst = std::max(worst, std::abs(pendulum_energy(s) - e0));
  }
  EXPECT_LT(worst / scale, 0.05);
  EXPECT_NEAR(worst / scale, 0.045278, 1e-5);
}

TEST(PendulumTest, NeverTerminatesBeforeCap) {
  PendulumEnv env;
  env.reset(3);
  for (int i = 1; i <= 200; ++i) {
    const auto o = env.step(vector_value({0.0}));
    EXPECT_EQ(o.done, i == 200);
    if (i == 200) EXPECT_TRUE(o.truncated());
  }
}

}  // namespace
}  // namespace gymkit::classic_control
