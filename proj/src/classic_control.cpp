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

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gymkit::classic_control {

namespace {

std::string signed_fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.3f", x);
  return buf;
}

}  // namespace

bool cartpole_in_bounds(const CartPoleState& s) {
  return std::abs(s.x) <= cartpole::kXLimit &&
         std::abs(s.theta) <= cartpole::kThetaLimit;
}

Transition<CartPoleState> cartpole_step(const CartPoleState& s,
                                        std::int64_t action) {
  using namespace cartpole;
  const double force = action == 1 ? kForce : -kForce;
  const double sin_t = std::sin(s.theta);
  const double cos_t = std::cos(s.theta);
  const double temp =
      (force + kPoleMass * kHalfLength * s.theta_dot * s.theta_dot * sin_t) /
      kTotalMass;
  const double theta_acc =
      (kGravity * sin_t - cos_t * temp) /
      (kHalfLength * (4.0 / 3.0 - kPoleMass * cos_t * cos_t / kTotalMass));
  const double x_acc = (force + kPoleMass * kHalfLength *
                                    (s.theta_dot * s.theta_dot * sin_t -
                                     theta_acc * cos_t)) /
                       kTotalMass;

  CartPoleState next;
  next.x_dot = s.x_dot + kDt * x_acc;
  next.x = s.x + kDt * next.x_dot;
  next.theta_dot = s.theta_dot + kDt * theta_acc;
  next.theta = s.theta + kDt * next.theta_dot;
  const bool done = !cartpole_in_bounds(s) || !cartpole_in_bounds(next);
  return {next, 1.0, done};
}

CartPoleEnv::CartPoleEnv(std::int64_t max_steps)
    : EnvBase(EnvDescriptor{
          // Observation bounds are the termination bounds padded by the most
          // one step can overshoot; speeds are capped generously.
          Space::box({-4.8, -1.0e3, -0.5, -1.0e3}, {4.8, 1.0e3, 0.5, 1.0e3}),
          Space::discrete(2),
          {0.0, 1.0},
          max_steps}) {}

Value CartPoleEnv::on_reset(Rng& rng) {
  state_ = {rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05),
            rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)};
  return vector_value({state_.x, state_.x_dot, state_.theta, state_.theta_dot});
}

StepOutcome CartPoleEnv::on_step(const Value& action, Rng&) {
  auto t = cartpole_step(state_, as_int(action));
  state_ = t.next;
  return {vector_value({state_.x, state_.x_dot, state_.theta, state_.theta_dot}),
          t.reward, t.done, {}};
}

std::string CartPoleEnv::render() const {
  return "x=" + signed_fixed(state_.x) + " th=" + signed_fixed(state_.theta) +
         " xd=" + signed_fixed(state_.x_dot) +
         " thd=" + signed_fixed(state_.theta_dot);
}

Transition<MountainCarState> mountaincar_step(const MountainCarState& s,
                                              std::int64_t action) {
  using namespace mountain_car;
  double velocity = s.velocity + static_cast<double>(action - 1) * kPower -
                    kGravity * std::cos(3.0 * s.position);
  velocity = std::clamp(velocity, -kMaxSpeed, kMaxSpeed);
  double position = std::clamp(s.position + velocity, kMinPosition, kMaxPosition);
  if (position == kMinPosition && velocity < 0.0) velocity = 0.0;
  const bool done = position >= kGoalPosition;
  return {{position, velocity}, -1.0, done};
}

MountainCarEnv::MountainCarEnv()
    : EnvBase(EnvDescriptor{
          Space::box({mountain_car::kMinPosition, -mountain_car::kMaxSpeed},
                     {mountain_car::kMaxPosition, mountain_car::kMaxSpeed}),
          Space::discrete(3),
          {-1.0, -1.0},
          mountain_car::kMaxSteps}) {}

Value MountainCarEnv::on_reset(Rng& rng) {
  state_ = {rng.uniform(-0.6, -0.4), 0.0};
  return vector_value({state_.position, state_.velocity});
}

StepOutcome MountainCarEnv::on_step(const Value& action, Rng&) {
  auto t = mountaincar_step(state_, as_int(action));
  state_ = t.next;
  return {vector_value({state_.position, state_.velocity}), t.reward, t.done,
          {}};
}

std::string MountainCarEnv::render() const {
  return "p=" + signed_fixed(state_.position) +
         " v=" + signed_fixed(state_.velocity);
}

double wrap_angle(double theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = theta - kTwoPi * std::ceil((theta - std::numbers::pi) / kTwoPi);
  // Guard the open end against rounding in the subtraction above.
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

Transition<PendulumState> pendulum_step(const PendulumState& s, double torque) {
  using namespace pendulum;
  const double angle = wrap_angle(s.theta);
  const double cost = angle * angle + 0.1 * s.theta_dot * s.theta_dot +
                      0.001 * torque * torque;
  const double theta_acc = 3.0 * kGravity / (2.0 * kLength) * std::sin(s.theta) +
                           3.0 / (kMass * kLength * kLength) * torque;
  PendulumState next;
  next.theta_dot = std::clamp(s.theta_dot + theta_acc * kDt, -kMaxSpeed, kMaxSpeed);
  next.theta = wrap_angle(s.theta + next.theta_dot * kDt);
  return {next, -cost, false};
}

double pendulum_energy(const PendulumState& s) {
  using namespace pendulum;
  const double inertia = kMass * kLength * kLength / 3.0;
  return 0.5 * inertia * s.theta_dot * s.theta_dot +
         kMass * kGravity * 0.5 * kLength * std::cos(s.theta);
}

PendulumEnv::PendulumEnv()
    : EnvBase(EnvDescriptor{
          Space::box({-std::numbers::pi, -pendulum::kMaxSpeed},
                     {std::numbers::pi, pendulum::kMaxSpeed}),
          Space::box({-pendulum::kMaxTorque}, {pendulum::kMaxTorque}),
          {-(std::numbers::pi * std::numbers::pi +
             0.1 * pendulum::kMaxSpeed * pendulum::kMaxSpeed +
             0.001 * pendulum::kMaxTorque * pendulum::kMaxTorque),
           0.0},
          pendulum::kMaxSteps}) {}

Value PendulumEnv::on_reset(Rng& rng) {
  // pi - [0, 2pi) gives the half-open interval (-pi, pi].
  state_ = {std::numbers::pi - rng.uniform(0.0, 2.0 * std::numbers::pi),
            rng.uniform(-1.0, 1.0)};
  return vector_value({state_.theta, state_.theta_dot});
}

StepOutcome PendulumEnv::on_step(const Value& action, Rng&) {
  auto t = pendulum_step(state_, as_vector(action)[0]);
  state_ = t.next;
  return {vector_value({state_.theta, state_.theta_dot}), t.reward, t.done, {}};
}

std::string PendulumEnv::render() const {
  return "th=" + signed_fixed(state_.theta) +
         " thd=" + signed_fixed(state_.theta_dot);
}

}  // namespace gymkit::classic_control
