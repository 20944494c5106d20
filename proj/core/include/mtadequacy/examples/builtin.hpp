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

#ifndef MTADEQUACY_EXAMPLES_BUILTIN_HPP_
#define MTADEQUACY_EXAMPLES_BUILTIN_HPP_

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/execution.hpp"

namespace mta::examples {

// In-process SUTs by name: "trig", "trig:<mutant>", "lexer", "lexer:faulty".
absl::StatusOr<SutCallback> ResolveBuiltin(absl::string_view name);

}  // namespace mta::examples

#endif  // MTADEQUACY_EXAMPLES_BUILTIN_HPP_
