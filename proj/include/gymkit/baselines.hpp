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

#ifndef GYMKIT_BASELINES_HPP_
#define GYMKIT_BASELINES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "gymkit/env.hpp"

// Reference agents. They drive environments only through reset/step/seed.
namespace gymkit::baselines {

// ---------------------------------------------------------------------------
// Random policy

Value random_action(const EnvDescriptor& descriptor, Rng& rng);

/// Runs `episodes` episodes with uniformly random actions; returns the
/// episode returns.
std::vector<double> run_random_policy(Env& env, std::int64_t episodes, Rng& rng);

// ---------------------------------------------------------------------------
// Tabular Q-learning

struct QLearningParams {
  double alpha = 0.1;
  double gamma = 0.99;
  double epsilon_start = 1.0;
  double epsilon_end = 0.01;
  /// Fraction of the episode budget over which epsilon decays linearly.
  double decay_fraction = 0.8;
};

class QTable {
 public:
  QTable(std::int64_t num_states, std::int64_t num_actions);

  double& operator()(std::int64_t s, std::int64_t a) {
    return values_[index(s, a)];
  }
  double operator()(std::int64_t s, std::int64_t a) const {
    return values_[index(s, a)];
  }
  std::span<const double> row(std::int64_t s) const {
    return std::span<const double>(values_).subspan(index(s, 0),
                                                    static_cast<std::size_t>(num_actions_));
  }
  std::int64_t num_states() const { return num_states_; }
  std::int64_t num_actions() const { return num_actions_; }
  bool operator==(const QTable&) const = default;

 private:
  std::size_t index(std::int64_t s, std::int64_t a) const {
    return static_cast<std::size_t>(s * num_actions_ + a);
  }

  std::int64_t num_states_;
  std::int64_t num_actions_;
  std::vector<double> values_;
};

/// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)); the bootstrap
/// term is dropped when `done`.
void q_update(QTable& table, std::int64_t s, std::int64_t a, double reward,
              std::int64_t s_next, bool done, double alpha, double gamma);

/// Argmax with ties broken towards the lowest action index.
std::int64_t greedy_action(const QTable& table, std::int64_t s);

std::int64_t epsilon_greedy(const QTable& table, std::int64_t s,
                            double epsilon, Rng& rng);

/// Linear decay from epsilon_start to epsilon_end over the first
/// decay_fraction of the budget, then constant.
double epsilon_at(std::int64_t episode, std::int64_t budget,
                  const QLearningParams& params);

/// Throws kIncompatibleAgent unless both spaces are discrete.
void require_tabular(const EnvDescriptor& descriptor);

QTable train_q_learning(Env& env, std::int64_t episodes,
                        const QLearningParams& params, Rng& rng);

// ---------------------------------------------------------------------------
// Cross-entropy method over linear policies

struct CemParams {
  std::int64_t population = 16;
  double elite_fraction = 0.25;
  std::int64_t episodes_per_candidate = 1;
  double initial_stddev = 1.0;
  double stddev_floor = 1e-3;
};

/// Diagonal Gaussian over weight vectors of length obs_dim + 1 (bias last).
struct CemPolicy {
  std::vector<double> mean;
  std::vector<double> stddev;

  static CemPolicy initial(std::size_t dim, double stddev);
};

struct CemIteration {
  std::vector<std::vector<double>> candidates;
  std::vector<double> returns;
  /// Candidate indices, best first; ties keep the lower index.
  std::vector<std::size_t> elites;
  /// Every return equal while the stddev sat at the floor.
  bool degenerate = false;
};

/// Number of weights a linear policy needs; throws kIncompatibleAgent unless
/// observations are a box and actions are Discrete(2) or a 1-d box.
std::size_t linear_policy_dim(const EnvDescriptor& descriptor);

/// Discrete(2): action 1 iff w . [obs; 1] >= 0. 1-d box: w . [obs; 1]
/// clipped to the action bounds.
Value linear_action(const EnvDescriptor& descriptor,
                    std::span<const double> weights,
                    std::span<const double> observation);

/// Mean return of the linear policy over `episodes` episodes.
double evaluate_linear_policy(Env& env, std::span<const double> weights,
                              std::int64_t episodes);

std::int64_t elite_count(const CemParams& params);

/// Samples the population, evaluates each candidate in index order and refits
/// the policy to the elites (stddev floored).
CemIteration cem_iteration(CemPolicy& policy, Env& env, const CemParams& params,
                           Rng& rng);

struct CemRun {
  CemPolicy policy;
  std::vector<double> best_weights;
  double best_return = 0.0;
  /// Mean candidate return per iteration.
  std::vector<double> mean_returns;
  std::int64_t degenerate_iterations = 0;
};

CemRun train_cem(Env& env, std::int64_t iterations, const CemParams& params,
                 Rng& rng);

}  // namespace gymkit::baselines

#endif  // GYMKIT_BASELINES_HPP_
