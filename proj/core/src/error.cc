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

#include "mtadequacy/error.hpp"

#include <array>
#include <string>
#include <utility>

#include "absl/strings/cord.h"

namespace mta {
namespace {

constexpr absl::string_view kPayloadUrl = "mtadequacy/error-kind";

struct KindInfo {
  ErrorKind kind;
  absl::string_view name;
  absl::StatusCode code;
};

constexpr std::array kKinds = {
    KindInfo{ErrorKind::kInvalidDefinition, "InvalidDefinition",
             absl::StatusCode::kInvalidArgument},
    KindInfo{ErrorKind::kParseError, "ParseError",
             absl::StatusCode::kInvalidArgument},
    KindInfo{ErrorKind::kIneligibleSource, "IneligibleSource",
             absl::StatusCode::kFailedPrecondition},
    KindInfo{ErrorKind::kTransformFailure, "TransformFailure",
             absl::StatusCode::kAborted},
    KindInfo{ErrorKind::kUnknownInputId, "UnknownInputId",
             absl::StatusCode::kNotFound},
    KindInfo{ErrorKind::kMissingField, "MissingField",
             absl::StatusCode::kNotFound},
    KindInfo{ErrorKind::kAmbiguousChoice, "AmbiguousChoice",
             absl::StatusCode::kFailedPrecondition},
    KindInfo{ErrorKind::kUnsupportedCriterion, "UnsupportedCriterion",
             absl::StatusCode::kUnimplemented},
    KindInfo{ErrorKind::kEmptyRequirementSet, "EmptyRequirementSet",
             absl::StatusCode::kFailedPrecondition},
    KindInfo{ErrorKind::kEmptyMutantSet, "EmptyMutantSet",
             absl::StatusCode::kFailedPrecondition},
    KindInfo{ErrorKind::kNoSuites, "NoSuites",
             absl::StatusCode::kFailedPrecondition},
    KindInfo{ErrorKind::kInfeasible, "Infeasible",
             absl::StatusCode::kOutOfRange},
    KindInfo{ErrorKind::kOvershoot, "Overshoot",
             absl::StatusCode::kOutOfRange},
    KindInfo{ErrorKind::kUnachievable, "Unachievable",
             absl::StatusCode::kOutOfRange},
    KindInfo{ErrorKind::kLaunchFailure, "LaunchFailure",
             absl::StatusCode::kUnavailable},
};

const KindInfo& Info(ErrorKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info;
  }
  return kKinds.front();
}

}  // namespace

absl::string_view ErrorKindName(ErrorKind kind) { return Info(kind).name; }

absl::Status MakeError(ErrorKind kind, absl::string_view message) {
  const KindInfo& info = Info(kind);
  absl::Status status(info.code,
                      std::string(info.name) + ": " + std::string(message));
  status.SetPayload(kPayloadUrl, absl::Cord(info.name));
  return status;
}

std::optional<ErrorKind> GetErrorKind(const absl::Status& status) {
  auto payload = status.GetPayload(kPayloadUrl);
  if (!payload.has_value()) return std::nullopt;
  const std::string name(*payload);
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

}  // namespace mta
