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

#ifndef MTADEQUACY_RELATION_HPP_
#define MTADEQUACY_RELATION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mtadequacy/value.hpp"

namespace mta {

// What one execution of a system under test produced: the raw standard
// output text and the values an output parser extracted from it.
struct Output {
  std::string raw;
  std::vector<std::string> values;

  friend bool operator==(const Output&, const Output&) = default;
};

// Knobs that make follow-up derivation replayable. `picks` pins the values
// chosen by "pick" operations, in operation order; unpinned picks draw from
// an RNG seeded with `seed`.
struct DeriveOptions {
  std::uint64_t seed = 0;
  std::vector<double> picks;
};

using TransformCallback = std::function<absl::StatusOr<std::vector<Payload>>(
    std::span<const Payload> sources, std::uint64_t seed)>;
using VerifyCallback = std::function<absl::StatusOr<bool>(
    std::span<const Output> sources, std::span<const Output> followups,
    std::string* trace)>;

// In-process plugin hooks, looked up by name when definitions are loaded.
class PluginRegistry {
 public:
  void RegisterTransform(std::string name, TransformCallback callback);
  void RegisterVerifier(std::string name, VerifyCallback callback);

  const TransformCallback* FindTransform(absl::string_view name) const;
  const VerifyCallback* FindVerifier(absl::string_view name) const;

 private:
  std::map<std::string, TransformCallback, std::less<>> transforms_;
  std::map<std::string, VerifyCallback, std::less<>> verifiers_;
};

// Input subrelation: maps source payloads to follow-up payloads.
//
// Template form:
//   {"followups": [{"from": i, "ops": [op...]}, ...]}
// where each follow-up starts as a copy of source i and ops apply in order:
//   {"op": "affine", "field": f, "scale": a, "offset": b}     f' = a*f + b
//   {"op": "set", "field": f, "value": v}
//   {"op": "pick", "field": f, "period": P, "window": [lo, hi],
//    "from_source": bool, "step": s}
//       picks f' on the grid lo'+i*s inside [lo', hi'], where the window is
//       anchored at floor(f/P)*P and lo' = f when from_source is set
//   {"op": "prefix", "field": f, "text": t}
//   {"op": "truncate_at", "fields": [f...], "token": t, "occurrence": n}
//       cuts the concatenation of the listed text fields at the n-th token
//       occurrence, dropping the token and everything after it
//
// Hook forms:
//   {"hook": "callback", "name": n, "followups": count}
//   {"hook": "command", "argv": [...], "followups": count, "timeout_ms": t}
// Command protocol: stdin gets {"sources": [payload...], "seed": s}, stdout
// must be {"followups": [payload...]}.
class InputTransform {
 public:
  // Identity: one follow-up, a copy of source 0.
  InputTransform();

  static absl::StatusOr<InputTransform> FromJson(
      const Json& json, const PluginRegistry* registry = nullptr);

  const Json& ToJson() const { return json_; }
  int num_followups() const;
  // Largest source index referenced, plus one. Hooks report 0.
  int min_sources() const;

  // TransformFailure on any template or hook failure.
  absl::StatusOr<std::vector<Payload>> Apply(std::span<const Payload> sources,
                                             const DeriveOptions& options) const;

  struct Impl;

 private:
  Json json_;
  std::shared_ptr<const Impl> impl_;
};

enum class RelationVerdict { kHolds, kViolated, kUnevaluable };

struct RelationOutcome {
  RelationVerdict verdict = RelationVerdict::kHolds;
  std::string trace;
};

// Output subrelation over captured outputs.
//
// Template form: {"kind": k, "tolerance": t, "source": i, "followup": j, ...}
// with k one of
//   equal            s == f (numeric within tolerance, else exact values)
//   negated_equal    s == -f
//   le / ge          s <= f / s >= f, optional "min"/"max" bounds on both
//   sum_of_squares   s^2 + f^2 == "constant"
//   substring        concat(f values) occurs in concat(s values)
//   set_equal        set(s values) == set(f values)
// Numeric kinds read the first value of source output i and follow-up
// output j (both default 0).
//
// Hook forms: {"hook": "callback", "name": n} or
// {"hook": "command", "argv": [...]}; the command gets
// {"source_outputs": [[v...]], "followup_outputs": [[v...]]} on stdin and
// answers "true" or "false" as the first word of its output.
class OutputRelation {
 public:
  // Numeric equality with the default tolerance of 1e-9.
  OutputRelation();

  static absl::StatusOr<OutputRelation> FromJson(
      const Json& json, const PluginRegistry* registry = nullptr);

  const Json& ToJson() const { return json_; }
  double tolerance() const;

  RelationOutcome Evaluate(std::span<const Output> sources,
                           std::span<const Output> followups) const;

  struct Impl;

 private:
  Json json_;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace mta

#endif  // MTADEQUACY_RELATION_HPP_
