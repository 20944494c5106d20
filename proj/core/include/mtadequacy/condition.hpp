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

#ifndef MTADEQUACY_CONDITION_HPP_
#define MTADEQUACY_CONDITION_HPP_

#include <memory>

#include "absl/status/statusor.h"
#include "mtadequacy/value.hpp"

namespace mta {

// Declarative predicate over a payload. Used for category choices and for
// MR eligibility. Accepted forms:
//
//   true | {}                                    always holds
//   {"all": [c...]} {"any": [c...]} {"not": c}
//   {"field": f, "op": "=|!=|<|<=|>|>=", "value": v [, "mod": m]}
//   {"field": f, "in": [v...]}
//   {"field": f, "interval": [lo, hi], "closed": "[]|[)|(]|()" [, "mod": m]}
//   {"field": f, "matches": "<regex>"}          anchored, whole field
//
// "mod" reduces a numeric field into [0, m) before comparing.
class Condition {
 public:
  // The always-true condition.
  Condition();

  static absl::StatusOr<Condition> FromJson(const Json& json);

  // Returns the JSON the condition was parsed from.
  const Json& ToJson() const { return json_; }

  // MissingField if a referenced field is absent. Type mismatches on
  // ordering comparisons evaluate to false.
  absl::StatusOr<bool> Evaluate(const Payload& payload) const;

  struct Node;

 private:
  Condition(Json json, std::shared_ptr<const Node> root);

  Json json_;
  std::shared_ptr<const Node> root_;
};

}  // namespace mta

#endif  // MTADEQUACY_CONDITION_HPP_
