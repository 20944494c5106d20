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

#ifndef MTADEQUACY_VALUE_HPP_
#define MTADEQUACY_VALUE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "nlohmann/json.hpp"

namespace mta {

// All structured files keep key order as written so exports are byte-stable.
using Json = nlohmann::ordered_json;

// An enumerated tag such as a mode flag. Serialized as {"tag": "<name>"}.
struct Tag {
  std::string name;
  friend bool operator==(const Tag&, const Tag&) = default;
  friend auto operator<=>(const Tag&, const Tag&) = default;
};

using Scalar = std::variant<std::int64_t, double, std::string, Tag>;
using ScalarList = std::vector<Scalar>;
using Value = std::variant<std::int64_t, double, std::string, Tag, ScalarList>;

// Numeric view of integers and decimals.
std::optional<double> AsNumber(const Value& value);
// Text view of text and tags.
std::optional<absl::string_view> AsText(const Value& value);

// Equality used by conditions: numbers compare by value across int/decimal,
// text and tags compare by their spelling.
bool LooselyEqual(const Value& a, const Value& b);

std::string DebugString(const Value& value);

Json ValueToJson(const Value& value);
absl::StatusOr<Value> ValueFromJson(const Json& json);

// Ordered map of named fields. Field order is the declared order and is
// preserved by every transformation and by serialization.
class Payload {
 public:
  using Field = std::pair<std::string, Value>;

  Payload() = default;
  Payload(std::initializer_list<Field> fields);

  const Value* Find(absl::string_view name) const;
  // MissingField when absent.
  absl::StatusOr<Value> Get(absl::string_view name) const;
  // Replaces an existing field in place or appends a new one.
  void Set(std::string name, Value value);

  const std::vector<Field>& fields() const { return fields_; }
  bool empty() const { return fields_.empty(); }

  friend bool operator==(const Payload&, const Payload&) = default;

 private:
  std::vector<Field> fields_;
};

Json PayloadToJson(const Payload& payload);
absl::StatusOr<Payload> PayloadFromJson(const Json& json);
std::string DebugString(const Payload& payload);

struct TestInput {
  std::string id;
  Payload payload;

  friend bool operator==(const TestInput&, const TestInput&) = default;
};

// Identifiers used in files are restricted to [A-Za-z0-9_.-]+.
bool IsValidId(absl::string_view id);

}  // namespace mta

#endif  // MTADEQUACY_VALUE_HPP_
