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

#ifndef GYMKIT_CONFIG_HPP_
#define GYMKIT_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gymkit {

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Fully resolved key/value configuration (schema defaults plus overrides).
/// Typed getters throw kInvalidConfigValue on unparsable values.
class EnvConfig {
 public:
  EnvConfig() = default;
  explicit EnvConfig(std::map<std::string, std::string> values)
      : values_(std::move(values)) {}

  const std::string& get_string(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
  bool get_bool(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Splits `key=value`; throws kInvalidArgument without '='.
std::pair<std::string, std::string> split_assignment(const std::string& text);

std::int64_t parse_int(const std::string& key, const std::string& text);
double parse_double(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);

}  // namespace gymkit

#endif  // GYMKIT_CONFIG_HPP_
