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

#include "mtadequacy/condition.hpp"

#include <cmath>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "mtadequacy/error.hpp"

namespace mta {

enum class NodeKind { kAlways, kAll, kAny, kNot, kCompare, kIn, kInterval, kMatch };
enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

struct Condition::Node {
  NodeKind kind = NodeKind::kAlways;
  std::vector<std::shared_ptr<const Node>> children;
  std::string field;
  CompareOp op = CompareOp::kEq;
  Value operand;
  std::vector<Value> members;
  double lo = 0, hi = 0;
  bool lo_closed = true, hi_closed = true;
  std::optional<double> mod;
  std::regex pattern;
};

namespace {

using Node = Condition::Node;

absl::Status ParseFail(absl::string_view what, const Json& json) {
  return MakeError(ErrorKind::kParseError,
                   absl::StrCat(what, " in condition ", json.dump()));
}

double Reduce(double x, double mod) { return x - std::floor(x / mod) * mod; }

absl::StatusOr<std::shared_ptr<const Node>> Parse(const Json& json) {
  auto node = std::make_shared<Node>();
  if (json.is_boolean()) {
    if (!json.get<bool>()) return ParseFail("literal false not allowed", json);
    return std::shared_ptr<const Node>(node);
  }
  if (!json.is_object()) return ParseFail("expected object", json);
  if (json.empty()) return std::shared_ptr<const Node>(node);

  auto parse_children = [&](const Json& list) -> absl::Status {
    if (!list.is_array()) return ParseFail("expected array", json);
    for (const auto& child : list) {
      auto parsed = Parse(child);
      if (!parsed.ok()) return parsed.status();
      node->children.push_back(*std::move(parsed));
    }
    return absl::OkStatus();
  };

  if (json.contains("all")) {
    node->kind = NodeKind::kAll;
    if (auto s = parse_children(json["all"]); !s.ok()) return s;
    return std::shared_ptr<const Node>(node);
  }
  if (json.contains("any")) {
    node->kind = NodeKind::kAny;
    if (auto s = parse_children(json["any"]); !s.ok()) return s;
    return std::shared_ptr<const Node>(node);
  }
  if (json.contains("not")) {
    node->kind = NodeKind::kNot;
    auto child = Parse(json["not"]);
    if (!child.ok()) return child.status();
    node->children.push_back(*std::move(child));
    return std::shared_ptr<const Node>(node);
  }

  if (!json.contains("field") || !json["field"].is_string()) {
    return ParseFail("missing field name", json);
  }
  node->field = json["field"].get<std::string>();
  if (json.contains("mod")) {
    if (!json["mod"].is_number() || json["mod"].get<double>() <= 0) {
      return ParseFail("mod must be a positive number", json);
    }
    node->mod = json["mod"].get<double>();
  }

  if (json.contains("op")) {
    node->kind = NodeKind::kCompare;
    const std::string op = json["op"].is_string() ? json["op"].get<std::string>() : "";
    if (op == "=") node->op = CompareOp::kEq;
    else if (op == "!=") node->op = CompareOp::kNe;
    else if (op == "<") node->op = CompareOp::kLt;
    else if (op == "<=") node->op = CompareOp::kLe;
    else if (op == ">") node->op = CompareOp::kGt;
    else if (op == ">=") node->op = CompareOp::kGe;
    else return ParseFail("unknown comparison operator", json);
    if (!json.contains("value")) return ParseFail("missing value", json);
    auto value = ValueFromJson(json["value"]);
    if (!value.ok()) return value.status();
    node->operand = *std::move(value);
    return std::shared_ptr<const Node>(node);
  }
  if (json.contains("in")) {
    node->kind = NodeKind::kIn;
    if (!json["in"].is_array()) return ParseFail("'in' expects an array", json);
    for (const auto& item : json["in"]) {
      auto value = ValueFromJson(item);
      if (!value.ok()) return value.status();
      node->members.push_back(*std::move(value));
    }
    return std::shared_ptr<const Node>(node);
  }
  if (json.contains("interval")) {
    node->kind = NodeKind::kInterval;
    const Json& bounds = json["interval"];
    if (!bounds.is_array() || bounds.size() != 2 || !bounds[0].is_number() ||
        !bounds[1].is_number()) {
      return ParseFail("interval expects [lo, hi]", json);
    }
    node->lo = bounds[0].get<double>();
    node->hi = bounds[1].get<double>();
    const std::string closed =
        json.contains("closed") ? json["closed"].get<std::string>() : "[]";
    if (closed.size() != 2 || (closed[0] != '[' && closed[0] != '(') ||
        (closed[1] != ']' && closed[1] != ')')) {
      return ParseFail("closed must be one of [] [) (] ()", json);
    }
    node->lo_closed = closed[0] == '[';
    node->hi_closed = closed[1] == ']';
    if (node->lo > node->hi) return ParseFail("empty interval", json);
    return std::shared_ptr<const Node>(node);
  }
  if (json.contains("matches")) {
    node->kind = NodeKind::kMatch;
    if (!json["matches"].is_string()) return ParseFail("pattern must be text", json);
    try {
      node->pattern = std::regex(json["matches"].get<std::string>(),
                                 std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      return ParseFail(absl::StrCat("bad pattern (", e.what(), ")"), json);
    }
    return std::shared_ptr<const Node>(node);
  }
  return ParseFail("unrecognized form", json);
}

absl::StatusOr<bool> Eval(const Node& node, const Payload& payload) {
  switch (node.kind) {
    case NodeKind::kAlways:
      return true;
    case NodeKind::kAll:
      for (const auto& child : node.children) {
        auto r = Eval(*child, payload);
        if (!r.ok() || !*r) return r;
      }
      return true;
    case NodeKind::kAny:
      for (const auto& child : node.children) {
        auto r = Eval(*child, payload);
        if (!r.ok() || *r) return r;
      }
      return false;
    case NodeKind::kNot: {
      auto r = Eval(*node.children.front(), payload);
      if (!r.ok()) return r;
      return !*r;
    }
    default:
      break;
  }

  const Value* field = payload.Find(node.field);
  if (field == nullptr) {
    return MakeError(ErrorKind::kMissingField,
                     absl::StrCat("condition references missing field '",
                                  node.field, "'"));
  }
  std::optional<double> number = AsNumber(*field);
  if (number && node.mod) number = Reduce(*number, *node.mod);

  switch (node.kind) {
    case NodeKind::kCompare: {
      if (node.op == CompareOp::kEq || node.op == CompareOp::kNe) {
        bool eq = number && AsNumber(node.operand)
                      ? *number == *AsNumber(node.operand)
                      : LooselyEqual(*field, node.operand);
        return node.op == CompareOp::kEq ? eq : !eq;
      }
      auto rhs = AsNumber(node.operand);
      if (!number || !rhs) return false;
      switch (node.op) {
        case CompareOp::kLt: return *number < *rhs;
        case CompareOp::kLe: return *number <= *rhs;
        case CompareOp::kGt: return *number > *rhs;
        case CompareOp::kGe: return *number >= *rhs;
        default: return false;
      }
    }
    case NodeKind::kIn:
      for (const auto& member : node.members) {
        if (LooselyEqual(*field, member)) return true;
      }
      return false;
    case NodeKind::kInterval: {
      if (!number) return false;
      const double x = *number;
      const bool above = node.lo_closed ? x >= node.lo : x > node.lo;
      const bool below = node.hi_closed ? x <= node.hi : x < node.hi;
      return above && below;
    }
    case NodeKind::kMatch: {
      auto text = AsText(*field);
      if (!text) return false;
      return std::regex_match(text->begin(), text->end(), node.pattern);
    }
    default:
      return false;
  }
}

}  // namespace

Condition::Condition()
    : json_(Json::object()), root_(std::make_shared<const Node>()) {}

Condition::Condition(Json json, std::shared_ptr<const Node> root)
    : json_(std::move(json)), root_(std::move(root)) {}

absl::StatusOr<Condition> Condition::FromJson(const Json& json) {
  auto root = Parse(json);
  if (!root.ok()) return root.status();
  return Condition(json, *std::move(root));
}

absl::StatusOr<bool> Condition::Evaluate(const Payload& payload) const {
  return Eval(*root_, payload);
}

}  // namespace mta
