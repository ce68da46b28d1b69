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

#include "gymkit/registry.hpp"

#include <algorithm>
#include <cctype>

#include "gymkit/algorithmic.hpp"
#include "gymkit/classic_control.hpp"
#include "gymkit/error.hpp"
#include "gymkit/toy_text.hpp"

namespace gymkit {

EnvId parse_id(std::string_view text) {
  const auto malformed = [&](const char* why) {
    return Error(ErrorKind::kMalformedId,
                 "'" + std::string(text) + "': " + why);
  };
  const auto sep = text.rfind("-v");
  if (sep == std::string_view::npos) throw malformed("missing -v<version> suffix");
  const auto name = text.substr(0, sep);
  const auto digits = text.substr(sep + 2);
  if (name.empty()) throw malformed("empty name");
  if (!std::all_of(name.begin(), name.end(),
                   [](unsigned char c) { return std::isalnum(c) != 0; })) {
    throw malformed("name must be alphanumeric");
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw malformed("version must be decimal digits");
  }
  if (digits.size() > 1 && digits.front() == '0') {
    throw malformed("version has leading zeros");
  }
  if (digits.size() > 18) throw malformed("version too large");
  return EnvId{std::string(name), std::stoll(std::string(digits))};
}

void Registry::register_env(EnvSpec spec) {
  if (entries_.count(spec.id) > 0) {
    throw Error(ErrorKind::kDuplicateId, spec.id.str() + " is already registered");
  }
  if (!spec.factory) {
    throw Error(ErrorKind::kInvalidArgument, spec.id.str() + " has no factory");
  }
  const auto probe = spec.factory(resolve(spec, {}));
  if (!(probe->descriptor().observation_space == spec.descriptor.observation_space) ||
      !(probe->descriptor().action_space == spec.descriptor.action_space)) {
    throw Error(ErrorKind::kInvalidArgument,
                spec.id.str() + ": factory spaces differ from the descriptor");
  }
  auto id = spec.id;
  entries_.emplace(std::move(id), std::move(spec));
}

const EnvSpec& Registry::spec(const EnvId& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw Error(ErrorKind::kUnknownId, id.str() + " is not registered");
  }
  return it->second;
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [id, spec] : entries_) out.push_back(id.str());
  std::sort(out.begin(), out.end());
  return out;
}

EnvConfig Registry::resolve(const EnvSpec& spec, const Overrides& overrides) const {
  std::map<std::string, std::string> values(spec.config_schema.begin(),
                                            spec.config_schema.end());
  for (const auto& [key, value] : overrides) {
    auto it = values.find(key);
    if (it == values.end()) {
      throw Error(ErrorKind::kUnknownConfigKey,
                  spec.id.str() + " has no config key '" + key + "'");
    }
    it->second = value;
  }
  return EnvConfig(std::move(values));
}

std::unique_ptr<Env> Registry::make_unmonitored(const EnvId& id,
                                                const Overrides& overrides) const {
  const EnvSpec& s = spec(id);
  return s.factory(resolve(s, overrides));
}

std::unique_ptr<Monitor> Registry::make(const EnvId& id,
                                        const Overrides& overrides) const {
  auto env = make_unmonitored(id, overrides);
  Manifest manifest;
  manifest.env = id.str();
  // Later duplicates win, matching resolve().
  std::map<std::string, std::string> applied;
  for (const auto& [key, value] : overrides) applied[key] = value;
  manifest.overrides.assign(applied.begin(), applied.end());
  manifest.obs_space = to_text(env->descriptor().observation_space);
  manifest.act_space = to_text(env->descriptor().action_space);
  manifest.toolkit_version = kToolkitVersion;
  return std::make_unique<Monitor>(std::move(env), std::move(manifest));
}

std::unique_ptr<Monitor> Registry::make(std::string_view id,
                                        const Overrides& overrides) const {
  return make(parse_id(id), overrides);
}

namespace {

EnvSpec describe(EnvId id, EnvFactory factory,
                 std::vector<std::pair<std::string, std::string>> schema,
                 std::optional<ThresholdSpec> threshold) {
  std::map<std::string, std::string> defaults(schema.begin(), schema.end());
  const auto probe = factory(EnvConfig(defaults));
  return EnvSpec{std::move(id), probe->descriptor(), threshold,
                 std::move(factory), std::move(schema)};
}

EnvSpec algorithmic_spec(const char* name, algorithmic::Task task,
                         std::int64_t default_base) {
  auto factory = [task](const EnvConfig& c) -> std::unique_ptr<Env> {
    algorithmic::AlgoConfig config;
    config.task = task;
    config.base = c.get_int("base");
    config.length = c.get_int("length");
    config.curriculum = c.get_bool("curriculum");
    return std::make_unique<algorithmic::AlgorithmicEnv>(config);
  };
  return describe({name, 0}, factory,
                  {{"length", std::to_string(algorithmic::kMinLength)},
                   {"base", std::to_string(default_base)},
                   {"curriculum", "false"}},
                  std::nullopt);
}

}  // namespace

void register_builtins(Registry& registry) {
  using namespace classic_control;
  registry.register_env(describe(
      {"CartPole", 0},
      [](const EnvConfig&) { return std::make_unique<CartPoleEnv>(); }, {},
      ThresholdSpec{195.0, kDefaultWindow}));
  registry.register_env(describe(
      {"MountainCar", 0},
      [](const EnvConfig&) { return std::make_unique<MountainCarEnv>(); }, {},
      ThresholdSpec{-110.0, kDefaultWindow}));
  registry.register_env(describe(
      {"Pendulum", 0},
      [](const EnvConfig&) { return std::make_unique<PendulumEnv>(); }, {},
      std::nullopt));
  registry.register_env(describe(
      {"FrozenLake", 0},
      [](const EnvConfig& c) {
        return std::make_unique<toy_text::FrozenLakeEnv>(
            toy_text::LakeMap::parse(c.get_string("map")),
            c.get_bool("slippery"));
      },
      {{"map", toy_text::kDefaultLakeMap}, {"slippery", "true"}},
      ThresholdSpec{0.78, kDefaultWindow}));
  registry.register_env(algorithmic_spec("Copy", algorithmic::Task::kCopy, 5));
  registry.register_env(algorithmic_spec("Reverse", algorithmic::Task::kReverse, 5));
  registry.register_env(algorithmic_spec("Add", algorithmic::Task::kAdd, 3));
}

const Registry& builtin_registry() {
  static const Registry registry = [] {
    Registry r;
    register_builtins(r);
    return r;
  }();
  return registry;
}

}  // namespace gymkit
