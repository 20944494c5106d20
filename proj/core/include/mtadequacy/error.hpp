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

#ifndef MTADEQUACY_ERROR_HPP_
#define MTADEQUACY_ERROR_HPP_

#include <optional>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace mta {

// Domain error kinds. Every error returned by this library carries one of
// these as a status payload, on top of a canonical absl status code.
enum class ErrorKind {
  kInvalidDefinition,
  kParseError,
  kIneligibleSource,
  kTransformFailure,
  kUnknownInputId,
  kMissingField,
  kAmbiguousChoice,
  kUnsupportedCriterion,
  kEmptyRequirementSet,
  kEmptyMutantSet,
  kNoSuites,
  kInfeasible,
  kOvershoot,
  kUnachievable,
  kLaunchFailure,
};

absl::string_view ErrorKindName(ErrorKind kind);

absl::Status MakeError(ErrorKind kind, absl::string_view message);

// Returns the kind attached by MakeError, or nullopt for foreign statuses.
std::optional<ErrorKind> GetErrorKind(const absl::Status& status);

inline bool HasErrorKind(const absl::Status& status, ErrorKind kind) {
  return GetErrorKind(status) == kind;
}

}  // namespace mta

#endif  // MTADEQUACY_ERROR_HPP_
