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

#ifndef GYMKIT_REGISTRY_HPP_
#define GYMKIT_REGISTRY_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gymkit/config.hpp"
#include "gymkit/env.hpp"
#include "gymkit/monitor.hpp"

namespace gymkit {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// `<name>-v<version>`. Any behavior change to an environment gets a new id.
struct EnvId {
  std::string name;
  std::int64_t version = 0;

  std::string str() const { return name + "-v" + std::to_string(version); }
  auto operator<=>(const EnvId&) const = default;
};

/// Throws kMalformedId unless text is `<alnum name>-v<digits>` with no
/// leading zeros in the version.
EnvId parse_id(std::string_view text);

using EnvFactory = std::function<std::unique_ptr<Env>(const EnvConfig&)>;

struct EnvSpec {
  EnvId id;
  /// Descriptor of an instance built with the schema defaults.
  EnvDescriptor descriptor;
  std::optional<ThresholdSpec> threshold;
  EnvFactory factory;
  /// Accepted config keys with their default values.
  std::vector<std::pair<std::string, std::string>> config_schema;
};

/// Versioned catalog of environments. Entries are immutable once registered.
/// Registration is single-threaded; lookups and make are safe to run
/// concurrently afterwards.
class Registry {
 public:
  /// Throws kDuplicateId if the id is taken, and kInvalidArgument if a
  /// default-config instance does not expose the declared spaces.
  void register_env(EnvSpec spec);

  const EnvSpec& spec(const EnvId& id) const;
  bool contains(const EnvId& id) const { return entries_.count(id) > 0; }
  /// Registered ids in lexicographic order of their text form.
  std::vector<std::string> ids() const;

  /// Fresh monitored instance. Throws kUnknownId or kUnknownConfigKey.
  std::unique_ptr<Monitor> make(const EnvId& id,
                                const Overrides& overrides = {}) const;
  std::unique_ptr<Monitor> make(std::string_view id,
                                const Overrides& overrides = {}) const;
  /// Same as make() without the monitor wrapper.
  std::unique_ptr<Env> make_unmonitored(const EnvId& id,
                                        const Overrides& overrides = {}) const;

 private:
  EnvConfig resolve(const EnvSpec& spec, const Overrides& overrides) const;

  std::map<EnvId, EnvSpec> entries_;
};

/// Adds the seven built-in v0 environments.
void register_builtins(Registry& registry);

/// Process-wide registry preloaded with the built-ins.
const Registry& builtin_registry();

}  // namespace gymkit

#endif  // GYMKIT_REGISTRY_HPP_
