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

#include "mtadequacy/relation.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>
#include <utility>
#include <variant>

#include "absl/strings/ascii.h"
#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "mtadequacy/error.hpp"
#include "mtadequacy/subprocess.hpp"

namespace mta {

void PluginRegistry::RegisterTransform(std::string name,
                                       TransformCallback callback) {
  transforms_[std::move(name)] = std::move(callback);
}

void PluginRegistry::RegisterVerifier(std::string name, VerifyCallback callback) {
  verifiers_[std::move(name)] = std::move(callback);
}

const TransformCallback* PluginRegistry::FindTransform(
    absl::string_view name) const {
  auto it = transforms_.find(name);
  return it == transforms_.end() ? nullptr : &it->second;
}

const VerifyCallback* PluginRegistry::FindVerifier(absl::string_view name) const {
  auto it = verifiers_.find(name);
  return it == verifiers_.end() ? nullptr : &it->second;
}

namespace {

absl::Status DefinitionError(absl::string_view what, const Json& json) {
  return MakeError(ErrorKind::kInvalidDefinition,
                   absl::StrCat(what, ": ", json.dump()));
}

absl::Status TransformError(absl::string_view what) {
  return MakeError(ErrorKind::kTransformFailure, what);
}

std::optional<std::string> OptString(const Json& json, const char* key) {
  if (json.contains(key) && json[key].is_string()) {
    return json[key].get<std::string>();
  }
  return std::nullopt;
}

absl::StatusOr<std::vector<std::string>> ParseArgv(const Json& json) {
  if (!json.contains("argv") || !json["argv"].is_array() || json["argv"].empty()) {
    return DefinitionError("command hook needs a non-empty argv", json);
  }
  std::vector<std::string> argv;
  for (const auto& a : json["argv"]) {
    if (!a.is_string()) return DefinitionError("argv entries must be text", json);
    argv.push_back(a.get<std::string>());
  }
  return argv;
}

std::chrono::milliseconds ParseTimeout(const Json& json) {
  if (json.contains("timeout_ms") && json["timeout_ms"].is_number_integer()) {
    return std::chrono::milliseconds(json["timeout_ms"].get<std::int64_t>());
  }
  return std::chrono::milliseconds(5000);
}

// ---------------------------------------------------------------------------
// Input transform templates

struct AffineOp {
  std::string field;
  Json scale, offset;
};
struct SetOp {
  std::string field;
  Value value;
};
struct PickOp {
  std::string field;
  double period = 360;
  double lo = 0, hi = 0;
  bool from_source = false;
  double step = 1;
};
struct PrefixOp {
  std::string field;
  std::string text;
};
struct TruncateOp {
  std::vector<std::string> fields;
  std::string token;
  int occurrence = 1;
};
using FieldOp = std::variant<AffineOp, SetOp, PickOp, PrefixOp, TruncateOp>;

struct FollowupSpec {
  int from = 0;
  std::vector<FieldOp> ops;
};

absl::StatusOr<FieldOp> ParseOp(const Json& json) {
  const auto op = OptString(json, "op");
  if (!op) return DefinitionError("transform op needs an 'op' name", json);
  auto field = OptString(json, "field");
  if (*op == "affine") {
    if (!field) return DefinitionError("affine needs a field", json);
    Json scale = json.contains("scale") ? json["scale"] : Json(1);
    Json offset = json.contains("offset") ? json["offset"] : Json(0);
    if (!scale.is_number() || !offset.is_number()) {
      return DefinitionError("affine scale/offset must be numbers", json);
    }
    return FieldOp(AffineOp{*field, scale, offset});
  }
  if (*op == "set") {
    if (!field || !json.contains("value")) {
      return DefinitionError("set needs field and value", json);
    }
    auto value = ValueFromJson(json["value"]);
    if (!value.ok()) return value.status();
    return FieldOp(SetOp{*field, *std::move(value)});
  }
  if (*op == "pick") {
    if (!field) return DefinitionError("pick needs a field", json);
    PickOp pick;
    pick.field = *field;
    if (json.contains("period")) pick.period = json["period"].get<double>();
    const Json& window = json.contains("window") ? json["window"] : Json();
    if (!window.is_array() || window.size() != 2 || !window[0].is_number() ||
        !window[1].is_number()) {
      return DefinitionError("pick needs window [lo, hi]", json);
    }
    pick.lo = window[0].get<double>();
    pick.hi = window[1].get<double>();
    if (json.contains("from_source")) pick.from_source = json["from_source"].get<bool>();
    if (json.contains("step")) pick.step = json["step"].get<double>();
    if (pick.period <= 0 || pick.step <= 0 || pick.lo > pick.hi) {
      return DefinitionError("pick needs period > 0, step > 0, lo <= hi", json);
    }
    return FieldOp(pick);
  }
  if (*op == "prefix") {
    auto text = OptString(json, "text");
    if (!field || !text) return DefinitionError("prefix needs field and text", json);
    return FieldOp(PrefixOp{*field, *text});
  }
  if (*op == "truncate_at") {
    TruncateOp cut;
    if (!json.contains("fields") || !json["fields"].is_array() ||
        json["fields"].empty()) {
      return DefinitionError("truncate_at needs a field list", json);
    }
    for (const auto& f : json["fields"]) cut.fields.push_back(f.get<std::string>());
    auto token = OptString(json, "token");
    if (!token || token->empty()) {
      return DefinitionError("truncate_at needs a non-empty token", json);
    }
    cut.token = *token;
    if (json.contains("occurrence")) cut.occurrence = json["occurrence"].get<int>();
    if (cut.occurrence < 1) return DefinitionError("occurrence must be >= 1", json);
    return FieldOp(cut);
  }
  return DefinitionError("unknown transform op", json);
}

class OpApplier {
 public:
  OpApplier(const DeriveOptions& options, std::size_t& pick_index)
      : options_(options), pick_index_(pick_index) {}

  absl::Status operator()(const AffineOp& op, Payload& p) const {
    const Value* v = p.Find(op.field);
    if (!v) return TransformError(absl::StrCat("affine: no field ", op.field));
    const bool integral = std::holds_alternative<std::int64_t>(*v) &&
                          op.scale.is_number_integer() &&
                          op.offset.is_number_integer();
    if (integral) {
      p.Set(op.field, op.scale.get<std::int64_t>() * std::get<std::int64_t>(*v) +
                          op.offset.get<std::int64_t>());
      return absl::OkStatus();
    }
    auto x = AsNumber(*v);
    if (!x) return TransformError(absl::StrCat("affine: field ", op.field, " is not numeric"));
    p.Set(op.field, op.scale.get<double>() * *x + op.offset.get<double>());
    return absl::OkStatus();
  }

  absl::Status operator()(const SetOp& op, Payload& p) const {
    p.Set(op.field, op.value);
    return absl::OkStatus();
  }

  absl::Status operator()(const PickOp& op, Payload& p) const {
    const std::size_t index = pick_index_++;
    const Value* v = p.Find(op.field);
    auto x = v ? AsNumber(*v) : std::nullopt;
    if (!x) return TransformError(absl::StrCat("pick: field ", op.field, " is not numeric"));
    const double base = std::floor(*x / op.period) * op.period;
    const double lo = op.from_source ? *x : base + op.lo;
    const double hi = base + op.hi;
    if (lo > hi) {
      return TransformError(absl::StrFormat("pick: empty window [%g, %g]", lo, hi));
    }
    double chosen;
    if (index < options_.picks.size()) {
      chosen = options_.picks[index];
      constexpr double kSlack = 1e-9;
      if (chosen < lo - kSlack || chosen > hi + kSlack) {
        return TransformError(absl::StrFormat(
            "pick: pinned value %g outside window [%g, %g]", chosen, lo, hi));
      }
    } else {
      const auto count =
          static_cast<std::uint64_t>(std::floor((hi - lo) / op.step + 1e-9)) + 1;
      std::mt19937_64 rng(options_.seed + 0x9E3779B97F4A7C15ULL * (index + 1));
      chosen = lo + static_cast<double>(rng() % count) * op.step;
    }
    if (std::holds_alternative<std::int64_t>(*v)) {
      p.Set(op.field, static_cast<std::int64_t>(std::llround(chosen)));
    } else {
      p.Set(op.field, chosen);
    }
    return absl::OkStatus();
  }

  absl::Status operator()(const PrefixOp& op, Payload& p) const {
    const Value* v = p.Find(op.field);
    auto text = v ? AsText(*v) : std::nullopt;
    if (!text) return TransformError(absl::StrCat("prefix: field ", op.field, " is not text"));
    p.Set(op.field, absl::StrCat(op.text, *text));
    return absl::OkStatus();
  }

  absl::Status operator()(const TruncateOp& op, Payload& p) const {
    std::vector<std::string> parts;
    std::string joined;
    for (const auto& name : op.fields) {
      const Value* v = p.Find(name);
      auto text = v ? AsText(*v) : std::nullopt;
      if (!text) return TransformError(absl::StrCat("truncate_at: field ", name, " is not text"));
      parts.emplace_back(*text);
      joined.append(text->data(), text->size());
    }
    std::size_t pos = std::string::npos;
    std::size_t from = 0;
    for (int seen = 0; seen < op.occurrence; ++seen) {
      pos = joined.find(op.token, from);
      if (pos == std::string::npos) return absl::OkStatus();
      from = pos + op.token.size();
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::size_t end = start + parts[i].size();
      if (pos < start) {
        p.Set(op.fields[i], std::string());
      } else if (pos < end) {
        p.Set(op.fields[i], parts[i].substr(0, pos - start));
      }
      start = end;
    }
    return absl::OkStatus();
  }

 private:
  const DeriveOptions& options_;
  std::size_t& pick_index_;
};

Json OutputsToJson(std::span<const Output> outputs) {
  Json out = Json::array();
  for (const auto& o : outputs) out.push_back(o.values);
  return out;
}

}  // namespace

struct InputTransform::Impl {
  enum class Kind { kTemplate, kCallback, kCommand } kind = Kind::kTemplate;
  std::vector<FollowupSpec> followups;
  int hook_followups = 1;
  TransformCallback callback;
  std::vector<std::string> argv;
  std::chrono::milliseconds timeout{5000};
};

InputTransform::InputTransform()
    : json_({{"followups", Json::array({{{"from", 0}, {"ops", Json::array()}}})}}),
      impl_([] {
        auto impl = std::make_shared<Impl>();
        impl->followups.push_back(FollowupSpec{});
        return impl;
      }()) {}

absl::StatusOr<InputTransform> InputTransform::FromJson(
    const Json& json, const PluginRegistry* registry) {
  auto impl = std::make_shared<Impl>();
  if (!json.is_object()) return DefinitionError("transform must be an object", json);
  if (auto hook = OptString(json, "hook")) {
    if (!json.contains("followups") || !json["followups"].is_number_integer() ||
        json["followups"].get<int>() < 1) {
      return DefinitionError("transform hook needs followups >= 1", json);
    }
    impl->hook_followups = json["followups"].get<int>();
    if (*hook == "callback") {
      impl->kind = Impl::Kind::kCallback;
      auto name = OptString(json, "name");
      const TransformCallback* cb =
          (registry && name) ? registry->FindTransform(*name) : nullptr;
      if (!cb) return DefinitionError("unregistered transform callback", json);
      impl->callback = *cb;
    } else if (*hook == "command") {
      impl->kind = Impl::Kind::kCommand;
      auto argv = ParseArgv(json);
      if (!argv.ok()) return argv.status();
      impl->argv = *std::move(argv);
      impl->timeout = ParseTimeout(json);
    } else {
      return DefinitionError("unknown transform hook", json);
    }
  } else {
    if (!json.contains("followups") || !json["followups"].is_array() ||
        json["followups"].empty()) {
      return DefinitionError("transform needs a non-empty followups list", json);
    }
    for (const auto& spec_json : json["followups"]) {
      FollowupSpec spec;
      if (spec_json.contains("from")) spec.from = spec_json["from"].get<int>();
      if (spec.from < 0) return DefinitionError("negative source index", spec_json);
      if (spec_json.contains("ops")) {
        for (const auto& op_json : spec_json["ops"]) {
          auto op = ParseOp(op_json);
          if (!op.ok()) return op.status();
          spec.ops.push_back(*std::move(op));
        }
      }
      impl->followups.push_back(std::move(spec));
    }
  }
  InputTransform t;
  t.json_ = json;
  t.impl_ = std::move(impl);
  return t;
}

int InputTransform::num_followups() const {
  return impl_->kind == Impl::Kind::kTemplate
             ? static_cast<int>(impl_->followups.size())
             : impl_->hook_followups;
}

int InputTransform::min_sources() const {
  int n = 0;
  for (const auto& spec : impl_->followups) n = std::max(n, spec.from + 1);
  return n;
}

absl::StatusOr<std::vector<Payload>> InputTransform::Apply(
    std::span<const Payload> sources, const DeriveOptions& options) const {
  std::vector<Payload> out;
  switch (impl_->kind) {
    case Impl::Kind::kTemplate: {
      std::size_t pick_index = 0;
      OpApplier apply(options, pick_index);
      for (const auto& spec : impl_->followups) {
        if (static_cast<std::size_t>(spec.from) >= sources.size()) {
          return TransformError(absl::StrCat("follow-up refers to source ", spec.from));
        }
        Payload followup = sources[spec.from];
        for (const auto& op : spec.ops) {
          auto status = std::visit(
              [&](const auto& o) { return apply(o, followup); }, op);
          if (!status.ok()) return status;
        }
        out.push_back(std::move(followup));
      }
      return out;
    }
    case Impl::Kind::kCallback: {
      auto result = impl_->callback(sources, options.seed);
      if (!result.ok()) return TransformError(result.status().message());
      out = *std::move(result);
      break;
    }
    case Impl::Kind::kCommand: {
      Json request = {{"sources", Json::array()}, {"seed", options.seed}};
      for (const auto& s : sources) request["sources"].push_back(PayloadToJson(s));
      auto run = RunProcess({impl_->argv, request.dump() + "\n", impl_->timeout});
      if (!run.ok()) return TransformError(run.status().message());
      if (run->timed_out || run->exit_code != 0) {
        return TransformError(absl::StrCat("transform command failed (exit ",
                                           run->exit_code, ")"));
      }
      Json reply = Json::parse(run->stdout_text, nullptr, false);
      if (reply.is_discarded() || !reply.contains("followups") ||
          !reply["followups"].is_array()) {
        return TransformError("transform command printed no followups list");
      }
      for (const auto& item : reply["followups"]) {
        auto payload = PayloadFromJson(item);
        if (!payload.ok()) return TransformError(payload.status().message());
        out.push_back(*std::move(payload));
      }
      break;
    }
  }
  if (static_cast<int>(out.size()) != impl_->hook_followups) {
    return TransformError(absl::StrCat("hook produced ", out.size(),
                                       " follow-ups, expected ",
                                       impl_->hook_followups));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output relations

namespace {

enum class RelationKind {
  kEqual,
  kNegatedEqual,
  kLe,
  kGe,
  kSumOfSquares,
  kSubstring,
  kSetEqual,
  kCallback,
  kCommand,
};

std::optional<double> ParseNumber(absl::string_view text) {
  const std::string trimmed(absl::StripAsciiWhitespace(text));
  if (trimmed.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(trimmed.c_str(), &end);
  if (end != trimmed.c_str() + trimmed.size() || errno == ERANGE) return std::nullopt;
  return v;
}

}  // namespace

struct OutputRelation::Impl {
  RelationKind kind = RelationKind::kEqual;
  double tolerance = 1e-9;
  std::size_t source = 0;
  std::size_t followup = 0;
  std::optional<double> min, max;
  double constant = 1.0;
  VerifyCallback callback;
  std::vector<std::string> argv;
  std::chrono::milliseconds timeout{5000};
};

OutputRelation::OutputRelation()
    : json_({{"kind", "equal"}}), impl_(std::make_shared<Impl>()) {}

absl::StatusOr<OutputRelation> OutputRelation::FromJson(
    const Json& json, const PluginRegistry* registry) {
  if (!json.is_object()) return DefinitionError("relation must be an object", json);
  auto impl = std::make_shared<Impl>();
  if (json.contains("tolerance")) {
    if (!json["tolerance"].is_number() || json["tolerance"].get<double>() < 0) {
      return DefinitionError("tolerance must be a number >= 0", json);
    }
    impl->tolerance = json["tolerance"].get<double>();
  }
  if (json.contains("source")) impl->source = json["source"].get<std::size_t>();
  if (json.contains("followup")) impl->followup = json["followup"].get<std::size_t>();
  if (json.contains("min")) impl->min = json["min"].get<double>();
  if (json.contains("max")) impl->max = json["max"].get<double>();
  if (json.contains("constant")) impl->constant = json["constant"].get<double>();

  if (auto hook = OptString(json, "hook")) {
    if (*hook == "callback") {
      impl->kind = RelationKind::kCallback;
      auto name = OptString(json, "name");
      const VerifyCallback* cb =
          (registry && name) ? registry->FindVerifier(*name) : nullptr;
      if (!cb) return DefinitionError("unregistered verifier callback", json);
      impl->callback = *cb;
    } else if (*hook == "command") {
      impl->kind = RelationKind::kCommand;
      auto argv = ParseArgv(json);
      if (!argv.ok()) return argv.status();
      impl->argv = *std::move(argv);
      impl->timeout = ParseTimeout(json);
    } else {
      return DefinitionError("unknown relation hook", json);
    }
  } else {
    const auto kind = OptString(json, "kind");
    if (!kind) return DefinitionError("relation needs a kind", json);
    static const std::map<std::string, RelationKind> kKinds = {
        {"equal", RelationKind::kEqual},
        {"negated_equal", RelationKind::kNegatedEqual},
        {"le", RelationKind::kLe},
        {"ge", RelationKind::kGe},
        {"sum_of_squares", RelationKind::kSumOfSquares},
        {"substring", RelationKind::kSubstring},
        {"set_equal", RelationKind::kSetEqual},
    };
    auto it = kKinds.find(*kind);
    if (it == kKinds.end()) return DefinitionError("unknown relation kind", json);
    impl->kind = it->second;
  }
  OutputRelation r;
  r.json_ = json;
  r.impl_ = std::move(impl);
  return r;
}

double OutputRelation::tolerance() const { return impl_->tolerance; }

RelationOutcome OutputRelation::Evaluate(std::span<const Output> sources,
                                         std::span<const Output> followups) const {
  const Impl& r = *impl_;
  auto outcome = [](bool holds, std::string trace) {
    return RelationOutcome{holds ? RelationVerdict::kHolds : RelationVerdict::kViolated,
                           absl::StrCat(trace, holds ? " -> holds" : " -> violated")};
  };
  auto unevaluable = [](std::string trace) {
    return RelationOutcome{RelationVerdict::kUnevaluable, std::move(trace)};
  };

  if (r.kind == RelationKind::kCallback) {
    std::string trace;
    auto holds = r.callback(sources, followups, &trace);
    if (!holds.ok()) return unevaluable(std::string(holds.status().message()));
    return outcome(*holds, trace.empty() ? "callback" : trace);
  }
  if (r.kind == RelationKind::kCommand) {
    Json request = {{"source_outputs", OutputsToJson(sources)},
                    {"followup_outputs", OutputsToJson(followups)}};
    auto run = RunProcess({r.argv, request.dump() + "\n", r.timeout});
    if (!run.ok()) return unevaluable(std::string(run.status().message()));
    if (run->timed_out || run->exit_code != 0) {
      return unevaluable(absl::StrCat("verifier command failed (exit ",
                                      run->exit_code, ")"));
    }
    const std::string answer(absl::StripAsciiWhitespace(run->stdout_text));
    const std::string word = answer.substr(0, answer.find_first_of(" \t\n"));
    if (word == "true" || word == "false") return outcome(word == "true", answer);
    return unevaluable(absl::StrCat("verifier answered '", answer, "'"));
  }

  if (r.source >= sources.size() || r.followup >= followups.size()) {
    return unevaluable("relation refers to a missing output");
  }
  const Output& s = sources[r.source];
  const Output& f = followups[r.followup];

  switch (r.kind) {
    case RelationKind::kSubstring: {
      const std::string hay = absl::StrJoin(s.values, "");
      const std::string needle = absl::StrJoin(f.values, "");
      return outcome(hay.find(needle) != std::string::npos,
                     absl::StrCat("substring: '", absl::CEscape(needle), "' in '",
                                  absl::CEscape(hay), "'"));
    }
    case RelationKind::kSetEqual: {
      std::set<std::string> a(s.values.begin(), s.values.end());
      std::set<std::string> b(f.values.begin(), f.values.end());
      return outcome(a == b, absl::StrCat("set_equal: {", absl::StrJoin(a, ","),
                                          "} vs {", absl::StrJoin(b, ","), "}"));
    }
    default:
      break;
  }

  std::optional<double> a = s.values.empty() ? std::nullopt : ParseNumber(s.values[0]);
  std::optional<double> b = f.values.empty() ? std::nullopt : ParseNumber(f.values[0]);
  if (r.kind == RelationKind::kEqual && (!a || !b)) {
    return outcome(s.values == f.values,
                   absl::StrCat("equal: [", absl::StrJoin(s.values, ","), "] vs [",
                                absl::StrJoin(f.values, ","), "]"));
  }
  if (!a || !b) {
    return unevaluable(absl::StrCat("unparseable numeric output: '",
                                    absl::CEscape(s.raw), "' / '",
                                    absl::CEscape(f.raw), "'"));
  }
  const double tol = r.tolerance;
  const std::string vals = absl::StrFormat("s=%.17g f=%.17g tol=%g", *a, *b, tol);
  auto in_bounds = [&](double x) {
    return (!r.min || x >= *r.min - tol) && (!r.max || x <= *r.max + tol);
  };
  switch (r.kind) {
    case RelationKind::kEqual:
      return outcome(std::fabs(*a - *b) <= tol, absl::StrCat("equal: ", vals));
    case RelationKind::kNegatedEqual:
      return outcome(std::fabs(*a + *b) <= tol, absl::StrCat("negated_equal: ", vals));
    case RelationKind::kLe:
      return outcome(*a <= *b + tol && in_bounds(*a) && in_bounds(*b),
                     absl::StrCat("le: ", vals));
    case RelationKind::kGe:
      return outcome(*a >= *b - tol && in_bounds(*a) && in_bounds(*b),
                     absl::StrCat("ge: ", vals));
    case RelationKind::kSumOfSquares: {
      const double sum = *a * *a + *b * *b;
      return outcome(std::fabs(sum - r.constant) <= tol,
                     absl::StrFormat("sum_of_squares: %s sum=%.17g constant=%g",
                                     vals, sum, r.constant));
    }
    default:
      return unevaluable("unsupported relation");
  }
}

}  // namespace mta
