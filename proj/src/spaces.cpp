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

#include "gymkit/spaces.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "gymkit/error.hpp"

namespace gymkit {

std::int64_t as_int(const Value& value) {
  if (const auto* k = std::get_if<std::int64_t>(&value)) return *k;
  throw Error(ErrorKind::kInvalidArgument, "expected an integer value");
}

const std::vector<double>& as_vector(const Value& value) {
  if (const auto* v = std::get_if<std::vector<double>>(&value)) return *v;
  throw Error(ErrorKind::kInvalidArgument, "expected a vector value");
}

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

namespace {

std::string format_reals(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(v[i]);
  }
  out += ']';
  return out;
}

[[noreturn]] void bad_space_text(std::string_view text) {
  throw Error(ErrorKind::kInvalidSpace,
              "cannot parse space text '" + std::string(text) + "'");
}

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    bad_space_text(whole);
  }
  return out;
}

std::vector<double> parse_reals(std::string_view text, std::string_view whole) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    bad_space_text(whole);
  }
  text = text.substr(1, text.size() - 2);
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      bad_space_text(whole);
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string format_value(const Value& value) {
  if (const auto* k = std::get_if<std::int64_t>(&value)) return std::to_string(*k);
  return format_reals(std::get<std::vector<double>>(value));
}

Space Space::discrete(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidSpace,
                "discrete space needs n >= 1, got " + std::to_string(n));
  }
  return Space(Discrete{n});
}

Space Space::box(std::vector<double> low, std::vector<double> high) {
  if (low.empty() || low.size() != high.size()) {
    throw Error(ErrorKind::kInvalidSpace,
                "box bounds must be nonempty and of equal length");
  }
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (!std::isfinite(low[i]) || !std::isfinite(high[i]) ||
        !(low[i] < high[i])) {
      throw Error(ErrorKind::kInvalidSpace,
                  "box coordinate " + std::to_string(i) +
                      " needs finite low < high");
    }
  }
  return Space(Box{std::move(low), std::move(high)});
}

const Discrete& Space::as_discrete() const {
  if (const auto* d = std::get_if<Discrete>(&kind_)) return *d;
  throw Error(ErrorKind::kInvalidArgument, "space is not discrete");
}

const Box& Space::as_box() const {
  if (const auto* b = std::get_if<Box>(&kind_)) return *b;
  throw Error(ErrorKind::kInvalidArgument, "space is not a box");
}

bool contains(const Space& space, const Value& value) {
  if (space.is_discrete()) {
    const auto* k = std::get_if<std::int64_t>(&value);
    return k != nullptr && *k >= 0 && *k < space.as_discrete().n;
  }
  const auto* v = std::get_if<std::vector<double>>(&value);
  const Box& box = space.as_box();
  if (v == nullptr || v->size() != box.low.size()) return false;
  for (std::size_t i = 0; i < v->size(); ++i) {
    // Written so that NaN is rejected.
    if (!((*v)[i] >= box.low[i] && (*v)[i] <= box.high[i])) return false;
  }
  return true;
}

Value sample(const Space& space, Rng& rng) {
  if (space.is_discrete()) {
    const auto n = static_cast<std::uint64_t>(space.as_discrete().n);
    return static_cast<std::int64_t>(rng.uniform_index(n));
  }
  const Box& box = space.as_box();
  std::vector<double> v(box.low.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = rng.uniform(box.low[i], box.high[i]);
  }
  return v;
}

std::size_t dimension(const Space& space) {
  return space.is_discrete() ? 1 : space.as_box().low.size();
}

std::string to_text(const Space& space) {
  if (space.is_discrete()) {
    return "discrete:" + std::to_string(space.as_discrete().n);
  }
  const Box& box = space.as_box();
  return "box:" + std::to_string(box.low.size()) + ":" + format_reals(box.low) +
         ":" + format_reals(box.high);
}

Space parse_space(std::string_view text) {
  constexpr std::string_view kDiscrete = "discrete:";
  constexpr std::string_view kBox = "box:";
  if (text.starts_with(kDiscrete)) {
    return Space::discrete(parse_integer(text.substr(kDiscrete.size()), text));
  }
  if (!text.starts_with(kBox)) bad_space_text(text);
  auto rest = text.substr(kBox.size());
  const auto first = rest.find(':');
  if (first == std::string_view::npos) bad_space_text(text);
  const auto dim = parse_integer(rest.substr(0, first), text);
  rest.remove_prefix(first + 1);
  const auto split = rest.find("]:[");
  if (split == std::string_view::npos) bad_space_text(text);
  auto low = parse_reals(rest.substr(0, split + 1), text);
  auto high = parse_reals(rest.substr(split + 2), text);
  if (static_cast<std::int64_t>(low.size()) != dim) bad_space_text(text);
  return Space::box(std::move(low), std::move(high));
}

}  // namespace gymkit
