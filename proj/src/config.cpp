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

#include "gymkit/config.hpp"

#include <charconv>
#include <system_error>

#include "gymkit/error.hpp"

namespace gymkit {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& text,
                            const char* expected) {
  throw Error(ErrorKind::kInvalidConfigValue,
              "'" + key + "=" + text + "' is not " + expected);
}

}  // namespace

std::int64_t parse_int(const std::string& key, const std::string& text) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    bad_value(key, text, "an integer");
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    bad_value(key, text, "a number");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  bad_value(key, text, "true or false");
}

const std::string& EnvConfig::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) {
    throw Error(ErrorKind::kUnknownConfigKey, "no config key '" + key + "'");
  }
  return it->second;
}

std::int64_t EnvConfig::get_int(const std::string& key) const {
  return parse_int(key, get_string(key));
}

double EnvConfig::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

bool EnvConfig::get_bool(const std::string& key) const {
  return parse_bool(key, get_string(key));
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected key=value, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

}  // namespace gymkit
