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

#include "gymkit/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gymkit/error.hpp"

namespace gymkit::baselines {

Value random_action(const EnvDescriptor& descriptor, Rng& rng) {
  return sample(descriptor.action_space, rng);
}

std::vector<double> run_random_policy(Env& env, std::int64_t episodes, Rng& rng) {
  std::vector<double> returns;
  returns.reserve(static_cast<std::size_t>(episodes));
  for (std::int64_t e = 0; e < episodes; ++e) {
    env.reset();
    double total = 0.0;
    bool done = false;
    while (!done) {
      const auto outcome = env.step(random_action(env.descriptor(), rng));
      total += outcome.reward;
      done = outcome.done;
    }
    returns.push_back(total);
  }
  return returns;
}

QTable::QTable(std::int64_t num_states, std::int64_t num_actions)
    : num_states_(num_states),
      num_actions_(num_actions),
      values_(static_cast<std::size_t>(num_states * num_actions), 0.0) {
  if (num_states < 1 || num_actions < 1) {
    throw Error(ErrorKind::kInvalidArgument, "Q-table needs positive dimensions");
  }
}

void q_update(QTable& table, std::int64_t s, std::int64_t a, double reward,
              std::int64_t s_next, bool done, double alpha, double gamma) {
  double target = reward;
  if (!done) {
    const auto next = table.row(s_next);
    target += gamma * *std::max_element(next.begin(), next.end());
  }
  table(s, a) += alpha * (target - table(s, a));
}

std::int64_t greedy_action(const QTable& table, std::int64_t s) {
  const auto row = table.row(s);
  // max_element returns the first maximum, which is the tie rule we want.
  return std::max_element(row.begin(), row.end()) - row.begin();
}

std::int64_t epsilon_greedy(const QTable& table, std::int64_t s, double epsilon,
                            Rng& rng) {
  if (epsilon > 0.0 && rng.uniform01() < epsilon) {
    return static_cast<std::int64_t>(
        rng.uniform_index(static_cast<std::uint64_t>(table.num_actions())));
  }
  return greedy_action(table, s);
}

double epsilon_at(std::int64_t episode, std::int64_t budget,
                  const QLearningParams& params) {
  const double horizon = params.decay_fraction * static_cast<double>(budget);
  if (horizon <= 0.0 || static_cast<double>(episode) >= horizon) {
    return params.epsilon_end;
  }
  const double progress = static_cast<double>(episode) / horizon;
  return params.epsilon_start + (params.epsilon_end - params.epsilon_start) * progress;
}

void require_tabular(const EnvDescriptor& descriptor) {
  if (!descriptor.observation_space.is_discrete() ||
      !descriptor.action_space.is_discrete()) {
    throw Error(ErrorKind::kIncompatibleAgent,
                "tabular Q-learning needs discrete observation and action spaces");
  }
}

QTable train_q_learning(Env& env, std::int64_t episodes,
                        const QLearningParams& params, Rng& rng) {
  require_tabular(env.descriptor());
  QTable table(env.descriptor().observation_space.as_discrete().n,
               env.descriptor().action_space.as_discrete().n);
  for (std::int64_t e = 0; e < episodes; ++e) {
    const double epsilon = epsilon_at(e, episodes, params);
    std::int64_t s = as_int(env.reset());
    bool done = false;
    while (!done) {
      const std::int64_t a = epsilon_greedy(table, s, epsilon, rng);
      const auto outcome = env.step(int_value(a));
      const std::int64_t s_next = as_int(outcome.observation);
      q_update(table, s, a, outcome.reward, s_next, outcome.done, params.alpha,
               params.gamma);
      s = s_next;
      done = outcome.done;
    }
  }
  return table;
}

CemPolicy CemPolicy::initial(std::size_t dim, double stddev) {
  return {std::vector<double>(dim, 0.0), std::vector<double>(dim, stddev)};
}

std::size_t linear_policy_dim(const EnvDescriptor& d) {
  const bool actions_ok =
      (d.action_space.is_discrete() && d.action_space.as_discrete().n == 2) ||
      (d.action_space.is_box() && dimension(d.action_space) == 1);
  if (!d.observation_space.is_box() || !actions_ok) {
    throw Error(ErrorKind::kIncompatibleAgent,
                "CEM needs box observations and Discrete(2) or 1-d box actions");
  }
  return dimension(d.observation_space) + 1;
}

Value linear_action(const EnvDescriptor& descriptor,
                    std::span<const double> weights,
                    std::span<const double> observation) {
  double activation = weights.back();
  for (std::size_t i = 0; i < observation.size(); ++i) {
    activation += weights[i] * observation[i];
  }
  if (descriptor.action_space.is_discrete()) {
    return int_value(activation >= 0.0 ? 1 : 0);
  }
  const Box& box = descriptor.action_space.as_box();
  return vector_value({std::clamp(activation, box.low[0], box.high[0])});
}

double evaluate_linear_policy(Env& env, std::span<const double> weights,
                              std::int64_t episodes) {
  double total = 0.0;
  for (std::int64_t e = 0; e < episodes; ++e) {
    Value observation = env.reset();
    bool done = false;
    while (!done) {
      auto outcome = env.step(
          linear_action(env.descriptor(), weights, as_vector(observation)));
      total += outcome.reward;
      done = outcome.done;
      observation = std::move(outcome.observation);
    }
  }
  return total / static_cast<double>(episodes);
}

std::int64_t elite_count(const CemParams& params) {
  return static_cast<std::int64_t>(
      std::ceil(params.elite_fraction * static_cast<double>(params.population)));
}

CemIteration cem_iteration(CemPolicy& policy, Env& env, const CemParams& params,
                           Rng& rng) {
  if (params.population < 2 || !(params.elite_fraction > 0.0) ||
      params.elite_fraction > 1.0 || params.episodes_per_candidate < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "CEM needs population >= 2, 0 < elite_fraction <= 1 and "
                "episodes_per_candidate >= 1");
  }
  const std::size_t dim = linear_policy_dim(env.descriptor());
  if (policy.mean.size() != dim || policy.stddev.size() != dim) {
    throw Error(ErrorKind::kInvalidArgument, "CEM policy dimension mismatch");
  }

  CemIteration it;
  const auto n = static_cast<std::size_t>(params.population);
  it.candidates.resize(n);
  for (auto& w : it.candidates) {
    w.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      w[j] = policy.mean[j] + policy.stddev[j] * rng.normal();
    }
  }
  it.returns.reserve(n);
  for (const auto& w : it.candidates) {
    it.returns.push_back(evaluate_linear_policy(env, w, params.episodes_per_candidate));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return it.returns[a] > it.returns[b];
  });
  order.resize(static_cast<std::size_t>(elite_count(params)));
  it.elites = order;

  const bool at_floor = std::all_of(policy.stddev.begin(), policy.stddev.end(),
                                    [&](double s) { return s <= params.stddev_floor; });
  const bool flat = std::all_of(it.returns.begin(), it.returns.end(),
                                [&](double r) { return r == it.returns.front(); });
  it.degenerate = at_floor && flat;

  const auto k = static_cast<double>(it.elites.size());
  for (std::size_t j = 0; j < dim; ++j) {
    double mean = 0.0;
    for (std::size_t e : it.elites) mean += it.candidates[e][j];
    mean /= k;
    double var = 0.0;
    for (std::size_t e : it.elites) {
      const double d = it.candidates[e][j] - mean;
      var += d * d;
    }
    policy.mean[j] = mean;
    policy.stddev[j] = std::max(std::sqrt(var / k), params.stddev_floor);
  }
  return it;
}

CemRun train_cem(Env& env, std::int64_t iterations, const CemParams& params,
                 Rng& rng) {
  CemRun run;
  run.policy = CemPolicy::initial(linear_policy_dim(env.descriptor()),
                                  params.initial_stddev);
  bool have_best = false;
  for (std::int64_t i = 0; i < iterations; ++i) {
    const auto it = cem_iteration(run.policy, env, params, rng);
    const std::size_t top = it.elites.front();
    if (!have_best || it.returns[top] > run.best_return) {
      run.best_return = it.returns[top];
      run.best_weights = it.candidates[top];
      have_best = true;
    }
    run.mean_returns.push_back(
        std::accumulate(it.returns.begin(), it.returns.end(), 0.0) /
        static_cast<double>(it.returns.size()));
    if (it.degenerate) ++run.degenerate_iterations;
  }
  return run;
}

}  // namespace gymkit::baselines
