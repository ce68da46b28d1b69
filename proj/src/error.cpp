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

#include "gymkit/error.hpp"

namespace gymkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSpace: return "InvalidSpace";
    case ErrorKind::kIllegalPhase: return "IllegalPhase";
    case ErrorKind::kInvalidAction: return "InvalidAction";
    case ErrorKind::kMalformedId: return "MalformedId";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kUnknownId: return "UnknownId";
    case ErrorKind::kUnknownConfigKey: return "UnknownConfigKey";
    case ErrorKind::kInvalidConfigValue: return "InvalidConfigValue";
    case ErrorKind::kNoOpenEpisode: return "NoOpenEpisode";
    case ErrorKind::kEmptyLog: return "EmptyLog";
    case ErrorKind::kInsufficientEpisodes: return "InsufficientEpisodes";
    case ErrorKind::kMalformedLog: return "MalformedLog";
    case ErrorKind::kIncompatibleAgent: return "IncompatibleAgent";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace gymkit
