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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <string>

#include "gymkit/algorithmic.hpp"
#include "gymkit/bench.hpp"
#include "gymkit/classic_control.hpp"
#include "gymkit/error.hpp"
#include "gymkit/monitor.hpp"
#include "gymkit/registry.hpp"
#include "gymkit/spaces.hpp"
#include "gymkit/toy_text.hpp"

namespace py = pybind11;
using namespace gymkit;

namespace {

Overrides to_overrides(const std::map<std::string, std::string>& values) {
  return {values.begin(), values.end()};
}

const char* phase_name(EpisodePhase phase) {
  switch (phase) {
    case EpisodePhase::kNeedsReset: return "needs_reset";
    case EpisodePhase::kInProgress: return "in_progress";
    case EpisodePhase::kTerminal: return "terminal";
  }
  return "unknown";
}

algorithmic::Task parse_task(const std::string& name) {
  if (name == "copy") return algorithmic::Task::kCopy;
  if (name == "reverse") return algorithmic::Task::kReverse;
  if (name == "add") return algorithmic::Task::kAdd;
  throw Error(ErrorKind::kInvalidArgument, "unknown task '" + name + "'");
}

py::dict run_result_dict(const bench::RunResult& r) {
  py::dict d;
  d["log_path"] = r.log_path;
  d["episodes"] = r.log.episodes.size();
  d["rewards"] = r.log.rewards();
  d["final_performance"] = r.final_performance;
  d["tail"] = r.tail;
  d["episodes_to_threshold"] = r.episodes_to_threshold;
  d["policy_weights"] = r.policy_weights;
  d["eval_return"] = r.eval_return;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gymkit, m) {
  m.doc() = "gymkit: reinforcement-learning environments, monitor and baselines";
  m.attr("__version__") = kToolkitVersion;

  // Raised for every toolkit error; `kind` holds the error kind name.
  static PyObject* error_type =
      py::exception<Error>(m, "GymkitError", PyExc_RuntimeError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error_type)(e.what());
      instance.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type, instance.ptr());
    }
  });

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform01", &Rng::uniform01);

  py::class_<Space>(m, "Space")
      .def_static("discrete", &Space::discrete, py::arg("n"))
      .def_static("box", &Space::box, py::arg("low"), py::arg("high"))
      .def_static("parse", &parse_space, py::arg("text"))
      .def_property_readonly("is_discrete", &Space::is_discrete)
      .def_property_readonly("is_box", &Space::is_box)
      .def_property_readonly("n", [](const Space& s) { return s.as_discrete().n; })
      .def_property_readonly("low", [](const Space& s) { return s.as_box().low; })
      .def_property_readonly("high", [](const Space& s) { return s.as_box().high; })
      .def_property_readonly("dimension", &dimension)
      .def("contains", &contains, py::arg("value"))
      .def("sample", &sample, py::arg("rng"))
      .def("__eq__", [](const Space& a, const Space& b) { return a == b; })
      .def("__str__", &to_text)
      .def("__repr__", [](const Space& s) { return "Space('" + to_text(s) + "')"; });

  py::class_<EnvDescriptor>(m, "EnvDescriptor")
      .def_readonly("observation_space", &EnvDescriptor::observation_space)
      .def_readonly("action_space", &EnvDescriptor::action_space)
      .def_readonly("reward_range", &EnvDescriptor::reward_range)
      .def_readonly("max_episode_steps", &EnvDescriptor::max_episode_steps);

  py::class_<StepOutcome>(m, "StepOutcome")
      .def_readonly("observation", &StepOutcome::observation)
      .def_readonly("reward", &StepOutcome::reward)
      .def_readonly("done", &StepOutcome::done)
      .def_readonly("info", &StepOutcome::info)
      .def_property_readonly("truncated", &StepOutcome::truncated)
      .def("__iter__", [](const StepOutcome& o) {
        return py::iter(py::make_tuple(o.observation, o.reward, o.done, o.info));
      });

  py::class_<EpisodeRecord>(m, "EpisodeRecord")
      .def_readonly("index", &EpisodeRecord::index)
      .def_readonly("total_reward", &EpisodeRecord::total_reward)
      .def_readonly("length", &EpisodeRecord::length)
      .def_readonly("seed", &EpisodeRecord::seed)
      .def_readonly("truncated", &EpisodeRecord::truncated)
      .def_readonly("wall_time_ms", &EpisodeRecord::wall_time_ms);

  py::class_<Manifest>(m, "Manifest")
      .def_readonly("env", &Manifest::env)
      .def_readonly("overrides", &Manifest::overrides)
      .def_readonly("obs_space", &Manifest::obs_space)
      .def_readonly("act_space", &Manifest::act_space)
      .def_readonly("seed", &Manifest::seed)
      .def_readonly("toolkit_version", &Manifest::toolkit_version);

  py::class_<MonitorLog>(m, "MonitorLog")
      .def_readonly("manifest", &MonitorLog::manifest)
      .def_readonly("episodes", &MonitorLog::episodes)
      .def("rewards", &MonitorLog::rewards)
      .def("serialize", &serialize_log)
      .def("__eq__", [](const MonitorLog& a, const MonitorLog& b) { return a == b; });

  py::class_<Monitor>(m, "Env")
      .def("reset", &Monitor::reset, py::arg("seed") = py::none())
      .def("step", &Monitor::step, py::arg("action"))
      .def("seed", &Monitor::seed, py::arg("seed"))
      .def("render", &Monitor::render)
      .def("attach_log", &Monitor::attach_log, py::arg("path"))
      .def_property_readonly("descriptor", &Monitor::descriptor,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("observation_space",
                             [](const Monitor& e) { return e.descriptor().observation_space; })
      .def_property_readonly("action_space",
                             [](const Monitor& e) { return e.descriptor().action_space; })
      .def_property_readonly("phase", [](const Monitor& e) { return phase_name(e.phase()); })
      .def_property_readonly("episode_seed", &Monitor::episode_seed)
      .def_property_readonly("log", &Monitor::log);

  m.def(
      "make",
      [](const std::string& id, const std::map<std::string, std::string>& overrides) {
        return builtin_registry().make(id, to_overrides(overrides));
      },
      py::arg("id"), py::arg("overrides") = std::map<std::string, std::string>{},
      "Construct a monitored built-in environment.");
  m.def("list_envs", [] { return builtin_registry().ids(); });
  m.def("parse_id", [](const std::string& text) {
    const auto id = parse_id(text);
    return py::make_tuple(id.name, id.version);
  });
  m.def("describe", [](const std::string& id) {
    return bench::describe_env(builtin_registry().spec(parse_id(id)));
  });

  m.def(
      "learning_curve",
      [](const std::vector<double>& rewards, std::int64_t window) {
        std::vector<std::pair<std::int64_t, double>> out;
        for (const auto& p : learning_curve(rewards, window)) out.emplace_back(p.episode, p.mean);
        return out;
      },
      py::arg("rewards"), py::arg("window") = kDefaultWindow);
  m.def(
      "episodes_to_threshold",
      [](const std::vector<double>& rewards, double target, std::int64_t window) {
        return episodes_to_threshold(rewards, ThresholdSpec{target, window});
      },
      py::arg("rewards"), py::arg("target"), py::arg("window") = kDefaultWindow);
  m.def(
      "final_performance",
      [](const std::vector<double>& rewards, std::int64_t tail) {
        return final_performance(rewards, tail);
      },
      py::arg("rewards"), py::arg("tail") = bench::kFinalPerformanceTail);
  m.def("parse_log", [](const std::string& text) { return parse_log(text); }, py::arg("text"));
  m.def("read_log", &read_log_file, py::arg("path"));

  m.def(
      "cartpole_step",
      [](std::array<double, 4> s, std::int64_t action) {
        const auto t = classic_control::cartpole_step({s[0], s[1], s[2], s[3]}, action);
        return py::make_tuple(
            std::array<double, 4>{t.next.x, t.next.x_dot, t.next.theta, t.next.theta_dot},
            t.reward, t.done);
      },
      py::arg("state"), py::arg("action"));
  m.def(
      "mountaincar_step",
      [](std::array<double, 2> s, std::int64_t action) {
        const auto t = classic_control::mountaincar_step({s[0], s[1]}, action);
        return py::make_tuple(std::array<double, 2>{t.next.position, t.next.velocity}, t.reward,
                              t.done);
      },
      py::arg("state"), py::arg("action"));
  m.def(
      "pendulum_step",
      [](std::array<double, 2> s, double torque) {
        const auto t = classic_control::pendulum_step({s[0], s[1]}, torque);
        return py::make_tuple(std::array<double, 2>{t.next.theta, t.next.theta_dot}, t.reward,
                              t.done);
      },
      py::arg("state"), py::arg("torque"));
  m.def(
      "frozenlake_optimum",
      [](const std::string& map, bool slippery) {
        return toy_text::optimal_success_probability(toy_text::LakeMap::parse(map), slippery);
      },
      py::arg("map") = std::string(toy_text::kDefaultLakeMap), py::arg("slippery") = true);
  m.def(
      "algo_target",
      [](const std::string& task, const algorithmic::TapeRows& rows, std::int64_t base) {
        return algorithmic::algo_target(parse_task(task), rows, base);
      },
      py::arg("task"), py::arg("rows"), py::arg("base"));

  m.def(
      "run_benchmark",
      [](const std::string& env, const std::string& agent, std::int64_t budget,
         std::uint64_t seed, const std::filesystem::path& out_dir,
         const std::map<std::string, std::string>& overrides,
         const std::map<std::string, std::string>& params, std::int64_t eval_episodes) {
        bench::RunConfig c;
        c.env = env;
        c.agent = agent;
        c.budget = budget;
        c.seed = seed;
        c.out_dir = out_dir;
        c.overrides = to_overrides(overrides);
        c.params = to_overrides(params);
        c.eval_episodes = eval_episodes;
        bench::RunResult result;
        {
          py::gil_scoped_release release;
          result = bench::run_benchmark(c);
        }
        return run_result_dict(result);
      },
      py::arg("env"), py::arg("agent"), py::arg("budget"), py::arg("seed") = 0,
      py::arg("out_dir") = std::filesystem::path("."),
      py::arg("overrides") = std::map<std::string, std::string>{},
      py::arg("params") = std::map<std::string, std::string>{},
      py::arg("eval_episodes") = 0);
}
