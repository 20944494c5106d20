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

#ifndef MTADEQUACY_SUITE_IO_HPP_
#define MTADEQUACY_SUITE_IO_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/model.hpp"

namespace mta {

// Suite definition file:
//   {"inputs": [{"id": t, "payload": {...}}],
//    "mrs": [<MR>...],
//    "mgs": [{"id", "mr", "sources", "followups", "seed", "picks"}] | "auto"
//           | {"auto": true, "seed": s}}
// "auto" builds one MG "<input>.<mr>" per eligible (input, single-source MR)
// pair. Follow-ups may be omitted for explicit MGs; they are then derived.
struct SuiteDefinition {
  std::vector<TestInput> inputs;
  std::vector<MetamorphicRelation> mrs;
  // nullopt means the auto directive.
  std::optional<std::vector<Json>> mgs;
  std::uint64_t auto_seed = 0;
};

absl::StatusOr<SuiteDefinition> ParseSuiteDefinition(
    const Json& json, const PluginRegistry* registry = nullptr);

// Resolves MG directives and validates the result as a TestSuite.
absl::StatusOr<TestSuite> MaterializeSuite(const SuiteDefinition& definition);

// Parse + materialize from file text.
absl::StatusOr<TestSuite> ParseSuite(absl::string_view text,
                                     const PluginRegistry* registry = nullptr);

// One MG per eligible (input, MR) pair, MRs with one source only.
absl::StatusOr<std::vector<MetamorphicGroup>> AutoMgs(
    std::span<const TestInput> inputs, std::span<const MetamorphicRelation> mrs,
    std::uint64_t seed = 0);

Json InputToJson(const TestInput& input);
absl::StatusOr<TestInput> InputFromJson(const Json& json);
Json MgToJson(const MetamorphicGroup& mg);

Json SuiteToJson(const TestSuite& suite);
// Two-space indented JSON plus a trailing newline; stable byte for byte.
std::string SerializeSuite(const TestSuite& suite);

absl::StatusOr<Json> ParseJsonText(absl::string_view text, absl::string_view what);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, absl::string_view content);

}  // namespace mta

#endif  // MTADEQUACY_SUITE_IO_HPP_
