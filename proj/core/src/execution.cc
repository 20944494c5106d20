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

#include "mtadequacy/execution.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <mutex>
#include <thread>

#include "absl/strings/ascii.h"
#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "mtadequacy/error.hpp"
#include "mtadequacy/subprocess.hpp"
#include "mtadequacy/suite_io.hpp"

namespace mta {
namespace {

constexpr std::pair<InputStyle, absl::string_view> kStyles[] = {
    {InputStyle::kArgs, "args"},
    {InputStyle::kStdinLines, "stdin-lines"},
    {InputStyle::kStdinConcat, "stdin-concat"},
};

constexpr std::pair<VerdictStatus, absl::string_view> kStatuses[] = {
    {VerdictStatus::kSatisfied, "satisfied"},
    {VerdictStatus::kViolated, "violated"},
    {VerdictStatus::kExecutionError, "execution-error"},
};

absl::Status AdapterError(absl::string_view message, const Json& json) {
  return MakeError(ErrorKind::kInvalidDefinition, absl::StrCat(message, ": ", json.dump()));
}

std::string DoubleText(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string ScalarText(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) return absl::StrCat(v);
        if constexpr (std::is_same_v<T, double>) return DoubleText(v);
        if constexpr (std::is_same_v<T, std::string>) return v;
        if constexpr (std::is_same_v<T, Tag>) return v.name;
      },
      s);
}

Json OutputToJson(const Output& o) { return {{"raw", o.raw}, {"values", o.values}}; }

absl::StatusOr<std::vector<Output>> OutputsFromJson(const Json& json) {
  std::vector<Output> out;
  if (!json.is_array()) return MakeError(ErrorKind::kParseError, "outputs must be a list");
  for (const Json& o : json) {
    if (!o.is_object() || !o.contains("raw") || !o.contains("values")) {
      return MakeError(ErrorKind::kParseError, "output needs raw and values");
    }
    out.push_back({o["raw"].get<std::string>(),
                   o["values"].get<std::vector<std::string>>()});
  }
  return out;
}

}  // namespace

absl::StatusOr<OutputParser> OutputParser::FromJson(const Json& json) {
  OutputParser parser;
  if (json.is_null()) return parser;
  if (!json.is_object()) return AdapterError("output parser must be an object", json);
  const std::string kind = json.value("parser", std::string("lines"));
  if (kind == "lines") {
    parser.kind_ = Kind::kLines;
  } else if (kind == "whitespace") {
    parser.kind_ = Kind::kWhitespace;
  } else if (kind == "records") {
    parser.kind_ = Kind::kRecords;
    parser.terminator_ = json.value("terminator", std::string("\n"));
    parser.separator_ = json.value("separator", std::string(","));
    if (parser.terminator_.empty() || parser.separator_.empty()) {
      return AdapterError("records parser needs a terminator and separator", json);
    }
  } else {
    return AdapterError("unknown output parser", json);
  }
  return parser;
}

Json OutputParser::ToJson() const {
  switch (kind_) {
    case Kind::kLines:
      return {{"parser", "lines"}};
    case Kind::kWhitespace:
      return {{"parser", "whitespace"}};
    case Kind::kRecords:
      return {{"parser", "records"}, {"terminator", terminator_}, {"separator", separator_}};
  }
  return Json();
}

absl::StatusOr<std::vector<std::string>> OutputParser::Parse(absl::string_view raw) const {
  std::vector<std::string> values;
  switch (kind_) {
    case Kind::kLines:
      for (absl::string_view line : absl::StrSplit(raw, '\n', absl::SkipEmpty())) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) values.emplace_back(line);
      }
      return values;
    case Kind::kWhitespace:
      for (absl::string_view token :
           absl::StrSplit(raw, absl::ByAnyChar(" \t\r\n"), absl::SkipEmpty())) {
        values.emplace_back(token);
      }
      return values;
    case Kind::kRecords: {
      std::vector<absl::string_view> records = absl::StrSplit(raw, terminator_);
      if (!records.back().empty()) {
        return MakeError(ErrorKind::kParseError,
                         absl::StrCat("unterminated record '",
                                      absl::CEscape(records.back()), "'"));
      }
      records.pop_back();
      for (absl::string_view record : records) {
        const auto pos = record.find(separator_);
        values.emplace_back(pos == absl::string_view::npos
                                ? absl::string_view()
                                : record.substr(pos + separator_.size()));
      }
      return values;
    }
  }
  return values;
}

std::string FieldText(const Value& value) {
  if (const auto* list = std::get_if<ScalarList>(&value)) {
    std::vector<std::string> parts;
    for (const auto& s : *list) parts.push_back(ScalarText(s));
    return absl::StrJoin(parts, " ");
  }
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ScalarList>) {
          return "";
        } else {
          return ScalarText(Scalar(v));
        }
      },
      value);
}

absl::StatusOr<SutAdapter> SutAdapterFromJson(const Json& json,
                                              const BuiltinResolver& builtins,
                                              const std::string& base_dir) {
  if (!json.is_object() || !json.contains("id") || !json["id"].is_string()) {
    return AdapterError("SUT adapter needs an id", json);
  }
  SutAdapter sut;
  sut.id = json["id"].get<std::string>();
  if (json.contains("builtin")) {
    if (!builtins) return AdapterError("no builtin SUTs available", json);
    auto callback = builtins(json["builtin"].get<std::string>());
    if (!callback.ok()) return callback.status();
    sut.mode = SutAdapter::Mode::kCallback;
    sut.callback = *std::move(callback);
    sut.concurrent_safe = json.value("concurrent_safe", true);
  } else if (json.contains("command")) {
    if (!json["command"].is_array() || json["command"].empty()) {
      return AdapterError("command must be a nonempty list", json);
    }
    sut.mode = SutAdapter::Mode::kCommand;
    for (const Json& arg : json["command"]) sut.argv.push_back(arg.get<std::string>());
    if (!base_dir.empty() && sut.argv[0].find('/') != std::string::npos &&
        std::filesystem::path(sut.argv[0]).is_relative()) {
      auto candidate = std::filesystem::path(base_dir) / sut.argv[0];
      if (std::filesystem::exists(candidate)) sut.argv[0] = candidate.string();
    }
    const std::string style = json.value("input_style", std::string("args"));
    auto it = std::find_if(std::begin(kStyles), std::end(kStyles),
                           [&](const auto& p) { return p.second == style; });
    if (it == std::end(kStyles)) return AdapterError("unknown input_style", json);
    sut.input_style = it->first;
  } else {
    return AdapterError("SUT adapter needs builtin or command", json);
  }
  auto parser = OutputParser::FromJson(json.value("output", Json()));
  if (!parser.ok()) return parser.status();
  sut.parser = *std::move(parser);
  if (json.contains("timeout_ms")) {
    sut.timeout = std::chrono::milliseconds(json["timeout_ms"].get<std::int64_t>());
  }
  if (auto status = ValidateAdapter(sut); !status.ok()) return status;
  return sut;
}

absl::Status ValidateAdapter(const SutAdapter& sut) {
  if (sut.timeout.count() <= 0) {
    return MakeError(ErrorKind::kInvalidDefinition,
                     absl::StrCat("SUT ", sut.id, ": timeout must be positive"));
  }
  if (sut.mode == SutAdapter::Mode::kCallback ? !sut.callback : sut.argv.empty()) {
    return MakeError(ErrorKind::kInvalidDefinition,
                     absl::StrCat("SUT ", sut.id, " has nothing to run"));
  }
  return absl::OkStatus();
}

absl::StatusOr<Output> ExecuteInput(const SutAdapter& sut, const Payload& payload) {
  Output out;
  if (sut.mode == SutAdapter::Mode::kCallback) {
    auto raw = sut.callback(payload);
    if (!raw.ok()) return raw.status();
    out.raw = *std::move(raw);
  } else {
    ProcessSpec spec{sut.argv, "", sut.timeout};
    for (const auto& [name, value] : payload.fields()) {
      switch (sut.input_style) {
        case InputStyle::kArgs:
          spec.argv.push_back(FieldText(value));
          break;
        case InputStyle::kStdinLines:
          absl::StrAppend(&spec.stdin_text, FieldText(value), "\n");
          break;
        case InputStyle::kStdinConcat:
          absl::StrAppend(&spec.stdin_text, FieldText(value));
          break;
      }
    }
    if (sut.input_style == InputStyle::kStdinConcat) spec.stdin_text += "\n";
    auto result = RunProcess(spec);
    if (!result.ok()) return result.status();
    if (result->timed_out) {
      return absl::DeadlineExceededError(
          absl::StrCat("timed out after ", sut.timeout.count(), " ms"));
    }
    if (result->exit_code != 0) {
      return absl::InternalError(absl::StrCat(
          "exit code ", result->exit_code, ": ",
          absl::StripAsciiWhitespace(result->stderr_text)));
    }
    out.raw = std::move(result->stdout_text);
  }
  auto values = sut.parser.Parse(out.raw);
  if (!values.ok()) return values.status();
  out.values = *std::move(values);
  return out;
}

absl::string_view VerdictStatusName(VerdictStatus status) {
  for (const auto& [s, name] : kStatuses) {
    if (s == status) return name;
  }
  return "unknown";
}

MgVerdict RunMg(const MetamorphicGroup& mg, const MetamorphicRelation& mr,
                std::span<const TestInput> sources, const SutAdapter& sut) {
  MgVerdict verdict;
  verdict.mg_id = mg.id;
  verdict.mr_id = mr.id;
  auto fail = [&](absl::string_view which, const absl::Status& status) {
    verdict.status = VerdictStatus::kExecutionError;
    verdict.launch_failure = HasErrorKind(status, ErrorKind::kLaunchFailure);
    verdict.detail = absl::StrCat(which, ": ", status.message());
    return verdict;
  };
  for (std::size_t i = 0; i < sources.size(); ++i) {
    auto out = ExecuteInput(sut, sources[i].payload);
    if (!out.ok()) return fail(absl::StrCat("source ", sources[i].id), out.status());
    verdict.source_outputs.push_back(*std::move(out));
  }
  for (std::size_t i = 0; i < mg.followups.size(); ++i) {
    auto out = ExecuteInput(sut, mg.followups[i]);
    if (!out.ok()) return fail(absl::StrCat("follow-up ", i), out.status());
    verdict.followup_outputs.push_back(*std::move(out));
  }
  RelationOutcome outcome =
      mr.output_relation.Evaluate(verdict.source_outputs, verdict.followup_outputs);
  verdict.detail = std::move(outcome.trace);
  switch (outcome.verdict) {
    case RelationVerdict::kHolds:
      verdict.status = VerdictStatus::kSatisfied;
      break;
    case RelationVerdict::kViolated:
      verdict.status = VerdictStatus::kViolated;
      break;
    case RelationVerdict::kUnevaluable:
      verdict.status = VerdictStatus::kExecutionError;
      break;
  }
  return verdict;
}

std::vector<MgVerdict> RunSuite(const TestSuite& suite, const SutAdapter& sut,
                                int workers) {
  const auto& mgs = suite.mgs();
  std::vector<MgVerdict> verdicts(mgs.size());
  auto run_one = [&](std::size_t i) {
    const MetamorphicRelation* mr = suite.FindRelation(mgs[i].mr_id);
    verdicts[i] = RunMg(mgs[i], *mr, suite.SourcesOf(mgs[i]), sut);
  };
  const bool serial = sut.mode == SutAdapter::Mode::kCallback && !sut.concurrent_safe;
  const std::size_t threads =
      serial ? 1 : std::min<std::size_t>(std::max(workers, 1), mgs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < mgs.size(); ++i) run_one(i);
    return verdicts;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < mgs.size(); i = next++) run_one(i);
    });
  }
  pool.clear();
  return verdicts;
}

std::string VerdictToJsonLine(const MgVerdict& verdict) {
  Json sources = Json::array(), followups = Json::array();
  for (const auto& o : verdict.source_outputs) sources.push_back(OutputToJson(o));
  for (const auto& o : verdict.followup_outputs) followups.push_back(OutputToJson(o));
  Json line = Json::object();
  line["mg"] = verdict.mg_id;
  line["mr"] = verdict.mr_id;
  line["status"] = VerdictStatusName(verdict.status);
  line["source_outputs"] = std::move(sources);
  line["followup_outputs"] = std::move(followups);
  line["detail"] = verdict.detail;
  if (verdict.launch_failure) line["launch_failure"] = true;
  return line.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

absl::StatusOr<std::vector<MgVerdict>> ParseVerdictLog(absl::string_view text) {
  std::vector<MgVerdict> out;
  for (absl::string_view line : absl::StrSplit(text, '\n', absl::SkipWhitespace())) {
    auto json = ParseJsonText(line, "verdict log line");
    if (!json.ok()) return json.status();
    MgVerdict v;
    if (!json->is_object() || !json->contains("mg") || !json->contains("status")) {
      return MakeError(ErrorKind::kParseError, "verdict record needs mg and status");
    }
    v.mg_id = (*json)["mg"].get<std::string>();
    v.mr_id = json->value("mr", std::string());
    const std::string status = (*json)["status"].get<std::string>();
    auto it = std::find_if(std::begin(kStatuses), std::end(kStatuses),
                           [&](const auto& p) { return p.second == status; });
    if (it == std::end(kStatuses)) {
      return MakeError(ErrorKind::kParseError, absl::StrCat("bad status '", status, "'"));
    }
    v.status = it->first;
    auto sources = OutputsFromJson(json->value("source_outputs", Json::array()));
    if (!sources.ok()) return sources.status();
    v.source_outputs = *std::move(sources);
    auto followups = OutputsFromJson(json->value("followup_outputs", Json::array()));
    if (!followups.ok()) return followups.status();
    v.followup_outputs = *std::move(followups);
    v.detail = json->value("detail", std::string());
    v.launch_failure = json->value("launch_failure", false);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace mta
