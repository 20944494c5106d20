// Copyright 2026 The mtadequacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTADEQUACY_RATIONAL_HPP_
#define MTADEQUACY_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "boost/rational.hpp"

namespace mta {

// Exact fraction. Always normalized, denominator positive.
using Rational = boost::rational<std::int64_t>;
// Compare against Rational(n), not a bare int: mixed-type operator== recurses
// without end in some Boost releases.

// "n/d", or "n" when the denominator is 1.
std::string ToString(const Rational& r);
// Always "n/d". Zero renders as "0/hint" when a positive hint is given.
std::string ToFractionString(const Rational& r, std::int64_t denominator_hint = 0);
// Fixed-point rendering with `digits` decimals, rounded half away from zero.
std::string ToDecimal(const Rational& r, int digits = 6);
double ToDouble(const Rational& r);

// Parses "n/d", "n", or a decimal such as "0.45" (converted exactly).
absl::StatusOr<Rational> ParseRational(absl::string_view text);

}  // namespace mta

#endif  // MTADEQUACY_RATIONAL_HPP_
