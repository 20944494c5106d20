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

#ifndef MTADEQUACY_SUBPROCESS_HPP_
#define MTADEQUACY_SUBPROCESS_HPP_

#include <chrono>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace mta {

struct ProcessSpec {
  std::vector<std::string> argv;
  std::string stdin_text;
  std::chrono::milliseconds timeout{5000};
};

struct ProcessResult {
  int exit_code = 0;
  bool timed_out = false;
  std::string stdout_text;
  std::string stderr_text;
};

// Runs argv[0] (PATH lookup) in its own process group, feeds stdin_text,
// captures both output streams. The whole group is killed on timeout.
// Returns LaunchFailure when the program cannot be started at all; a
// nonzero exit or timeout is reported in the result, not as an error.
absl::StatusOr<ProcessResult> RunProcess(const ProcessSpec& spec);

}  // namespace mta

#endif  // MTADEQUACY_SUBPROCESS_HPP_
