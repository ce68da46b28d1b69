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

#ifndef GYMKIT_SPACES_HPP_
#define GYMKIT_SPACES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gymkit/rng.hpp"

namespace gymkit {

/// An observation or action payload: a discrete index or a real vector.
using Value = std::variant<std::int64_t, std::vector<double>>;

inline Value int_value(std::int64_t k) { return Value{k}; }
inline Value vector_value(std::vector<double> v) { return Value{std::move(v)}; }

/// Returns the integer payload; throws kInvalidArgument on a vector value.
std::int64_t as_int(const Value& value);
/// Returns the vector payload; throws kInvalidArgument on an integer value.
const std::vector<double>& as_vector(const Value& value);

std::string format_value(const Value& value);

struct Discrete {
  std::int64_t n;
  bool operator==(const Discrete&) const = default;
};

struct Box {
  std::vector<double> low;
  std::vector<double> high;
  bool operator==(const Box&) const = default;
};

/// Typed set of valid observations or actions. Immutable once built; the
/// factories reject empty sets, non-finite bounds and inverted intervals.
class Space {
 public:
  static Space discrete(std::int64_t n);
  static Space box(std::vector<double> low, std::vector<double> high);

  bool is_discrete() const { return std::holds_alternative<Discrete>(kind_); }
  bool is_box() const { return std::holds_alternative<Box>(kind_); }
  const Discrete& as_discrete() const;
  const Box& as_box() const;

  bool operator==(const Space&) const = default;

 private:
  explicit Space(std::variant<Discrete, Box> kind) : kind_(std::move(kind)) {}
  std::variant<Discrete, Box> kind_;
};

bool contains(const Space& space, const Value& value);
Value sample(const Space& space, Rng& rng);
std::size_t dimension(const Space& space);

/// Manifest text form: `discrete:<n>` or `box:<d>:[l0,l1,...]:[h0,h1,...]`.
/// Reals use the shortest representation that parses back to the same double.
std::string to_text(const Space& space);
Space parse_space(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_real(double x);

}  // namespace gymkit

#endif  // GYMKIT_SPACES_HPP_
