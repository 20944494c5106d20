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

#ifndef MTADEQUACY_TOOLS_CLI_CLI_HPP_
#define MTADEQUACY_TOOLS_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace mta::cli {

enum ExitCode {
  kExitOk = 0,
  kExitConfig = 2,
  kExitGeneration = 3,
  kExitExecution = 4,
  kExitBelowGate = 5,
};

// Maps a failed status to its exit code.
int ExitCodeFor(const absl::Status& status);

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mta::cli

#endif  // MTADEQUACY_TOOLS_CLI_CLI_HPP_
