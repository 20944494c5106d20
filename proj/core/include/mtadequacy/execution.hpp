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

#ifndef MTADEQUACY_EXECUTION_HPP_
#define MTADEQUACY_EXECUTION_HPP_

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/model.hpp"
#include "mtadequacy/relation.hpp"

namespace mta {

// Splits raw standard output into the values output relations read.
//   lines       one value per non-empty line
//   whitespace  one value per whitespace-separated token
//   records     records end with `terminator`; the value of a record is the
//               text after its first `separator`, or "" when it has none.
//               Trailing text without a terminator is unparseable.
class OutputParser {
 public:
  enum class Kind { kLines, kWhitespace, kRecords };

  OutputParser() = default;
  static absl::StatusOr<OutputParser> FromJson(const Json& json);
  Json ToJson() const;

  // ParseError on unparseable text.
  absl::StatusOr<std::vector<std::string>> Parse(absl::string_view raw) const;

  Kind kind() const { return kind_; }

 private:
  Kind kind_ = Kind::kLines;
  std::string terminator_ = "\n";
  std::string separator_ = ",";
};

// How payloads reach an external command.
//   args          one argument per field, in declared order
//   stdin-lines   one line per field on standard input
//   stdin-concat  all field texts joined without separator, plus a newline
enum class InputStyle { kArgs, kStdinLines, kStdinConcat };

// In-process SUT: returns what the program would print.
using SutCallback = std::function<absl::StatusOr<std::string>(const Payload&)>;

struct SutAdapter {
  enum class Mode { kCallback, kCommand };

  std::string id;
  Mode mode = Mode::kCallback;
  SutCallback callback;
  // Whether `callback` may run on several threads at once.
  bool concurrent_safe = true;
  std::vector<std::string> argv;
  InputStyle input_style = InputStyle::kArgs;
  OutputParser parser;
  std::chrono::milliseconds timeout{5000};
};

// Looks up an in-process SUT by name, for {"builtin": name} adapters.
using BuiltinResolver = std::function<absl::StatusOr<SutCallback>(absl::string_view)>;

// {"id": s, "builtin": name} or {"id": s, "command": [argv...],
//  "input_style": "args|stdin-lines|stdin-concat"}, both with optional
// "output": {...parser...} and "timeout_ms". Relative command paths are
// resolved against `base_dir` when it is nonempty and the file exists.
absl::StatusOr<SutAdapter> SutAdapterFromJson(const Json& json,
                                              const BuiltinResolver& builtins = {},
                                              const std::string& base_dir = "");
// InvalidDefinition when timeout <= 0 or the adapter has nothing to run.
absl::Status ValidateAdapter(const SutAdapter& sut);

// Text form of one field, as handed to external commands.
std::string FieldText(const Value& value);

// Runs one input. LaunchFailure when the command cannot be started;
// a nonzero exit, timeout or unparseable output gives a plain error status.
absl::StatusOr<Output> ExecuteInput(const SutAdapter& sut, const Payload& payload);

enum class VerdictStatus { kSatisfied, kViolated, kExecutionError };
absl::string_view VerdictStatusName(VerdictStatus status);

struct MgVerdict {
  std::string mg_id;
  std::string mr_id;
  VerdictStatus status = VerdictStatus::kSatisfied;
  std::vector<Output> source_outputs;
  std::vector<Output> followup_outputs;
  std::string detail;
  // The SUT could not be started at all.
  bool launch_failure = false;

  friend bool operator==(const MgVerdict&, const MgVerdict&) = default;
};

// Executes sources then follow-ups and checks the output relation.
MgVerdict RunMg(const MetamorphicGroup& mg, const MetamorphicRelation& mr,
                std::span<const TestInput> sources, const SutAdapter& sut);

// One verdict per MG, ordered by MG id. Up to `workers` MGs run at once;
// callback adapters that are not concurrent-safe run one at a time.
std::vector<MgVerdict> RunSuite(const TestSuite& suite, const SutAdapter& sut,
                                int workers = 1);

// Verdict log: one JSON object per line.
std::string VerdictToJsonLine(const MgVerdict& verdict);
absl::StatusOr<std::vector<MgVerdict>> ParseVerdictLog(absl::string_view text);

}  // namespace mta

#endif  // MTADEQUACY_EXECUTION_HPP_
