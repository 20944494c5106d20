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

#ifndef MTADEQUACY_TOOLS_CLI_PROJECT_HPP_
#define MTADEQUACY_TOOLS_CLI_PROJECT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mtadequacy/adequacy.hpp"
#include "mtadequacy/coverage.hpp"
#include "mtadequacy/metrics.hpp"
#include "mtadequacy/model.hpp"
#include "mtadequacy/suite_io.hpp"

namespace mta::cli {

// project.json, all paths relative to the file's directory:
//   {
//     "suite": "suite.json",
//     "pool": "pool.json",                       optional, defaults to suite
//     "coverage": {"criterion": "statement", "matrix": "coverage.csv"}
//              or {"criterion": "io-ctf", "spec": "choices.json"},
//     "adequacy": {"k": 3, "distinctness": "by-id"},
//     "sut": {adapter},
//     "mutants": "mutants.json",                 optional
//     "max_iterations": 100000,                  optional
//     "output_dir": "out"
//   }
// Mutant manifest: {"original": {adapter}, "mutants": [{"id": m, "sut": {adapter}}]}.
struct ProjectConfig {
  std::filesystem::path dir;
  std::filesystem::path suite_path;
  std::optional<std::filesystem::path> pool_path;
  Json coverage;
  AdequacyConfig adequacy;
  std::optional<Json> sut;
  std::optional<std::filesystem::path> mutants_path;
  std::int64_t max_iterations = 100000;
  std::filesystem::path output_dir;

  std::filesystem::path Resolve(const std::string& relative) const;
};

// ParseError, MissingField or InvalidDefinition on a bad file.
absl::StatusOr<ProjectConfig> LoadProject(const std::string& path);

absl::StatusOr<TestSuite> LoadSuite(const std::filesystem::path& path);
absl::StatusOr<SuiteDefinition> LoadSuiteDefinition(const std::filesystem::path& path);

// Source inputs and MRs that generation may draw from.
absl::StatusOr<SuiteDefinition> LoadPool(const ProjectConfig& project);

// Coverage over `inputs`; matrix files must list every one of them.
absl::StatusOr<CoverageMap> LoadCoverage(const ProjectConfig& project,
                                         std::span<const TestInput> inputs);

absl::StatusOr<SutAdapter> LoadSut(const ProjectConfig& project);
absl::StatusOr<MutantSet> LoadMutants(const ProjectConfig& project);

}  // namespace mta::cli

#endif  // MTADEQUACY_TOOLS_CLI_PROJECT_HPP_
