# Copyright 2026 The gymkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the gymkit C++ core."""

from gymkit._gymkit import (
    Env,
    EnvDescriptor,
    EpisodeRecord,
    GymkitError,
    Manifest,
    MonitorLog,
    Rng,
    Space,
    StepOutcome,
    __version__,
    algo_target,
    cartpole_step,
    describe,
    episodes_to_threshold,
    final_performance,
    frozenlake_optimum,
    learning_curve,
    list_envs,
    make,
    mountaincar_step,
    parse_id,
    parse_log,
    pendulum_step,
    read_log,
    run_benchmark,
)

__all__ = [
    "Env",
    "EnvDescriptor",
    "EpisodeRecord",
    "GymkitError",
    "Manifest",
    "MonitorLog",
    "Rng",
    "Space",
    "StepOutcome",
    "__version__",
    "algo_target",
    "cartpole_step",
    "describe",
    "episodes_to_threshold",
    "final_performance",
    "frozenlake_optimum",
    "learning_curve",
    "list_envs",
    "make",
    "mountaincar_step",
    "parse_id",
    "parse_log",
    "pendulum_step",
    "read_log",
    "run_benchmark",
]
