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

#include "mtadequacy/value.hpp"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "mtadequacy/error.hpp"

namespace mta {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string ScalarDebugString(const Scalar& scalar) {
  return std::visit(
      Overloaded{
          [](std::int64_t v) { return absl::StrCat(v); },
          [](double v) { return absl::StrFormat("%.17g", v); },
          [](const std::string& v) { return absl::StrCat("\"", v, "\""); },
          [](const Tag& v) { return absl::StrCat("#", v.name); },
      },
      scalar);
}

Json ScalarToJson(const Scalar& scalar) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return Json(v); },
                        [](double v) { return Json(v); },
                        [](const std::string& v) { return Json(v); },
                        [](const Tag& v) { return Json{{"tag", v.name}}; },
                    },
                    scalar);
}

absl::StatusOr<Scalar> ScalarFromJson(const Json& json) {
  if (json.is_number_integer()) return Scalar(json.get<std::int64_t>());
  if (json.is_number_float()) return Scalar(json.get<double>());
  if (json.is_string()) return Scalar(json.get<std::string>());
  if (json.is_object() && json.size() == 1 && json.contains("tag") &&
      json["tag"].is_string()) {
    return Scalar(Tag{json["tag"].get<std::string>()});
  }
  return MakeError(ErrorKind::kParseError,
                   absl::StrCat("not a scalar value: ", json.dump()));
}

}  // namespace

std::optional<double> AsNumber(const Value& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    return static_cast<double>(*i);
  }
  if (const auto* d = std::get_if<double>(&value)) return *d;
  return std::nullopt;
}

std::optional<absl::string_view> AsText(const Value& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* t = std::get_if<Tag>(&value)) return t->name;
  return std::nullopt;
}

bool LooselyEqual(const Value& a, const Value& b) {
  auto na = AsNumber(a);
  auto nb = AsNumber(b);
  if (na && nb) return *na == *nb;
  auto ta = AsText(a);
  auto tb = AsText(b);
  if (ta && tb) return *ta == *tb;
  return a == b;
}

std::string DebugString(const Value& value) {
  if (const auto* list = std::get_if<ScalarList>(&value)) {
    std::vector<std::string> parts;
    for (const auto& s : *list) parts.push_back(ScalarDebugString(s));
    return absl::StrCat("[", absl::StrJoin(parts, ", "), "]");
  }
  return std::visit(
      Overloaded{
          [](const ScalarList&) { return std::string(); },
          [](const auto& v) { return ScalarDebugString(Scalar(v)); },
      },
      value);
}

Json ValueToJson(const Value& value) {
  if (const auto* list = std::get_if<ScalarList>(&value)) {
    Json out = Json::array();
    for (const auto& s : *list) out.push_back(ScalarToJson(s));
    return out;
  }
  return std::visit(
      Overloaded{
          [](const ScalarList&) { return Json(); },
          [](const auto& v) { return ScalarToJson(Scalar(v)); },
      },
      value);
}

absl::StatusOr<Value> ValueFromJson(const Json& json) {
  if (json.is_array()) {
    ScalarList list;
    for (const auto& item : json) {
      auto scalar = ScalarFromJson(item);
      if (!scalar.ok()) return scalar.status();
      list.push_back(*std::move(scalar));
    }
    return Value(std::move(list));
  }
  auto scalar = ScalarFromJson(json);
  if (!scalar.ok()) return scalar.status();
  return std::visit([](auto&& v) { return Value(std::move(v)); },
                    *std::move(scalar));
}

Payload::Payload(std::initializer_list<Field> fields) {
  for (const auto& [name, value] : fields) Set(name, value);
}

const Value* Payload::Find(absl::string_view name) const {
  for (const auto& [field, value] : fields_) {
    if (field == name) return &value;
  }
  return nullptr;
}

absl::StatusOr<Value> Payload::Get(absl::string_view name) const {
  if (const Value* v = Find(name)) return *v;
  return MakeError(ErrorKind::kMissingField,
                   absl::StrCat("payload has no field '", name, "'"));
}

void Payload::Set(std::string name, Value value) {
  for (auto& [field, existing] : fields_) {
    if (field == name) {
      existing = std::move(value);
      return;
    }
  }
  fields_.emplace_back(std::move(name), std::move(value));
}

Json PayloadToJson(const Payload& payload) {
  Json out = Json::object();
  for (const auto& [name, value] : payload.fields()) {
    out[name] = ValueToJson(value);
  }
  return out;
}

absl::StatusOr<Payload> PayloadFromJson(const Json& json) {
  if (!json.is_object()) {
    return MakeError(ErrorKind::kParseError, "payload must be an object");
  }
  Payload payload;
  for (const auto& [name, item] : json.items()) {
    auto value = ValueFromJson(item);
    if (!value.ok()) return value.status();
    payload.Set(name, *std::move(value));
  }
  return payload;
}

std::string DebugString(const Payload& payload) {
  std::vector<std::string> parts;
  for (const auto& [name, value] : payload.fields()) {
    parts.push_back(absl::StrCat(name, "=", DebugString(value)));
  }
  return absl::StrCat("(", absl::StrJoin(parts, ", "), ")");
}

bool IsValidId(absl::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

}  // namespace mta
