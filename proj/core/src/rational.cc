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

#include "mtadequacy/rational.hpp"

#include <cstdlib>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "mtadequacy/error.hpp"

namespace mta {

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return absl::StrCat(r.numerator());
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

std::string ToFractionString(const Rational& r, std::int64_t denominator_hint) {
  if (r.numerator() == 0 && denominator_hint > 0) {
    return absl::StrCat("0/", denominator_hint);
  }
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

std::string ToDecimal(const Rational& r, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r.numerator() < 0;
  const __int128 num = negative ? -static_cast<__int128>(r.numerator())
                                : static_cast<__int128>(r.numerator());
  const __int128 den = r.denominator();
  const __int128 scaled = (num * scale * 2 + den) / (den * 2);
  const std::int64_t whole = static_cast<std::int64_t>(scaled / scale);
  const std::int64_t frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = absl::StrCat(negative && scaled != 0 ? "-" : "", whole);
  if (digits > 0) {
    std::string tail = absl::StrCat(frac);
    out += ".";
    out.append(static_cast<std::size_t>(digits) - tail.size(), '0');
    out += tail;
  }
  return out;
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  auto bad = [&] {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("not a number: '", text, "'"));
  };
  if (auto slash = text.find('/'); slash != absl::string_view::npos) {
    std::int64_t n, d;
    if (!absl::SimpleAtoi(text.substr(0, slash), &n) ||
        !absl::SimpleAtoi(text.substr(slash + 1), &d) || d == 0) {
      return bad();
    }
    return Rational(n, d);
  }
  absl::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  std::vector<absl::string_view> parts = absl::StrSplit(body, '.');
  if (parts.size() > 2 || (parts[0].empty() && (parts.size() == 1 || parts[1].empty()))) {
    return bad();
  }
  std::int64_t whole = 0, frac = 0, scale = 1;
  if (!parts[0].empty() && !absl::SimpleAtoi(parts[0], &whole)) return bad();
  if (parts.size() == 2 && !parts[1].empty()) {
    if (parts[1].size() > 15 || !absl::SimpleAtoi(parts[1], &frac)) return bad();
    for (std::size_t i = 0; i < parts[1].size(); ++i) scale *= 10;
  }
  if (whole < 0 || frac < 0) return bad();
  Rational value(whole * scale + frac, scale);
  return negative ? -value : value;
}

}  // namespace mta
