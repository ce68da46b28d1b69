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

#ifndef GYMKIT_ERROR_HPP_
#define GYMKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gymkit {

enum class ErrorKind {
  kInvalidSpace,
  kIllegalPhase,
  kInvalidAction,
  kMalformedId,
  kDuplicateId,
  kUnknownId,
  kUnknownConfigKey,
  kInvalidConfigValue,
  kNoOpenEpisode,
  kEmptyLog,
  kInsufficientEpisodes,
  kMalformedLog,
  kIncompatibleAgent,
  kInvalidArgument,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the toolkit carries a kind so callers (the CLI in
// particular) can map it to a stable exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gymkit

#endif  // GYMKIT_ERROR_HPP_
