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

#ifndef GYMKIT_CLASSIC_CONTROL_HPP_
#define GYMKIT_CLASSIC_CONTROL_HPP_

#include <cstdint>
#include <numbers>
#include <string>

#include "gymkit/env.hpp"

namespace gymkit::classic_control {

template <typename State>
struct Transition {
  State next;
  double reward;
  bool done;
};

// ---------------------------------------------------------------------------
// CartPole: pole balanced on a cart pushed left or right with a fixed force.

struct CartPoleState {
  double x = 0.0;
  double x_dot = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;
  bool operator==(const CartPoleState&) const = default;
};

namespace cartpole {
inline constexpr double kGravity = 9.8;
inline constexpr double kCartMass = 1.0;
inline constexpr double kPoleMass = 0.1;
inline constexpr double kTotalMass = kCartMass + kPoleMass;
inline constexpr double kHalfLength = 0.5;
inline constexpr double kForce = 10.0;
inline constexpr double kDt = 0.02;
inline constexpr double kXLimit = 2.4;
inline constexpr double kThetaLimit = 12.0 * std::numbers::pi / 180.0;
inline constexpr std::int64_t kMaxSteps = 200;
}  // namespace cartpole

/// True while |x| <= 2.4 and |theta| <= 12 degrees.
bool cartpole_in_bounds(const CartPoleState& s);

/// One semi-implicit Euler step (velocities first, then positions). Reward is
/// +1 on every step; done when either the entry or the resulting state lies
/// outside the bounds.
Transition<CartPoleState> cartpole_step(const CartPoleState& s,
                                        std::int64_t action);

class CartPoleEnv : public EnvBase {
 public:
  explicit CartPoleEnv(std::int64_t max_steps = cartpole::kMaxSteps);
  std::string render() const override;
  const CartPoleState& state() const { return state_; }

 protected:
  Value on_reset(Rng& rng) override;
  StepOutcome on_step(const Value& action, Rng& rng) override;

 private:
  CartPoleState state_;
};

// ---------------------------------------------------------------------------
// MountainCar: underpowered car in a valley; reach p >= 0.5.

struct MountainCarState {
  double position = 0.0;
  double velocity = 0.0;
  bool operator==(const MountainCarState&) const = default;
};

namespace mountain_car {
inline constexpr double kMinPosition = -1.2;
inline constexpr double kMaxPosition = 0.6;
inline constexpr double kMaxSpeed = 0.07;
inline constexpr double kGoalPosition = 0.5;
inline constexpr double kPower = 0.001;
inline constexpr double kGravity = 0.0025;
inline constexpr std::int64_t kMaxSteps = 200;
}  // namespace mountain_car

Transition<MountainCarState> mountaincar_step(const MountainCarState& s,
                                              std::int64_t action);

class MountainCarEnv : public EnvBase {
 public:
  MountainCarEnv();
  std::string render() const override;
  const MountainCarState& state() const { return state_; }

 protected:
  Value on_reset(Rng& rng) override;
  StepOutcome on_step(const Value& action, Rng& rng) override;

 private:
  MountainCarState state_;
};

// ---------------------------------------------------------------------------
// Pendulum: torque-limited swing-up, theta = 0 upright. Never terminates on
// its own; episodes end by truncation.

struct PendulumState {
  double theta = 0.0;
  double theta_dot = 0.0;
  bool operator==(const PendulumState&) const = default;
};

namespace pendulum {
inline constexpr double kGravity = 10.0;
inline constexpr double kMass = 1.0;
inline constexpr double kLength = 1.0;
inline constexpr double kDt = 0.05;
inline constexpr double kMaxSpeed = 8.0;
inline constexpr double kMaxTorque = 2.0;
inline constexpr std::int64_t kMaxSteps = 200;
}  // namespace pendulum

/// Wraps an angle to (-pi, pi].
double wrap_angle(double theta);

/// Reward is computed from the entry state and the applied torque.
Transition<PendulumState> pendulum_step(const PendulumState& s, double torque);

/// Mechanical energy of the uniform rod, zero potential at the pivot height.
double pendulum_energy(const PendulumState& s);

class PendulumEnv : public EnvBase {
 public:
  PendulumEnv();
  std::string render() const override;
  const PendulumState& state() const { return state_; }

 protected:
  Value on_reset(Rng& rng) override;
  StepOutcome on_step(const Value& action, Rng& rng) override;

 private:
  PendulumState state_;
};

}  // namespace gymkit::classic_control

#endif  // GYMKIT_CLASSIC_CONTROL_HPP_
