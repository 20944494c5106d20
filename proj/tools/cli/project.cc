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

#include "project.hpp"

#include <algorithm>
#include <set>

#include "absl/strings/str_cat.h"
#include "mtadequacy/error.hpp"
#include "mtadequacy/examples/builtin.hpp"

namespace mta::cli {
namespace {

absl::Status Missing(absl::string_view what) {
  return MakeError(ErrorKind::kMissingField, absl::StrCat("project: missing ", what));
}

absl::StatusOr<Json> ReadJsonFile(const std::filesystem::path& path) {
  auto text = ReadTextFile(path.string());
  if (!text.ok()) return text.status();
  return ParseJsonText(*text, path.string());
}

}  // namespace

std::filesystem::path ProjectConfig::Resolve(const std::string& relative) const {
  std::filesystem::path p(relative);
  return p.is_absolute() ? p : dir / p;
}

absl::StatusOr<ProjectConfig> LoadProject(const std::string& path) {
  auto json = ReadJsonFile(path);
  if (!json.ok()) return json.status();
  if (!json->is_object()) {
    return MakeError(ErrorKind::kParseError, absl::StrCat(path, ": expected an object"));
  }
  ProjectConfig project;
  project.dir = std::filesystem::absolute(path).parent_path();
  try {
    if (!json->contains("suite")) return Missing("suite");
    project.suite_path = project.Resolve((*json)["suite"].get<std::string>());
    if (json->contains("pool")) {
      project.pool_path = project.Resolve((*json)["pool"].get<std::string>());
    }
    project.coverage = json->value("coverage", Json());
    if (json->contains("adequacy")) {
      const Json& adequacy = (*json)["adequacy"];
      project.adequacy.k = adequacy.value("k", 1);
      auto mode = ParseDistinctness(adequacy.value("distinctness", std::string("by-id")));
      if (!mode.ok()) return mode.status();
      project.adequacy.distinctness = *mode;
    }
    if (json->contains("sut")) project.sut = (*json)["sut"];
    if (json->contains("mutants")) {
      project.mutants_path = project.Resolve((*json)["mutants"].get<std::string>());
    }
    project.max_iterations = json->value("max_iterations", std::int64_t{100000});
    project.output_dir = project.Resolve(json->value("output_dir", std::string("out")));
  } catch (const Json::exception& e) {
    return MakeError(ErrorKind::kParseError, absl::StrCat(path, ": ", e.what()));
  }
  if (project.adequacy.k < 1) {
    return MakeError(ErrorKind::kInvalidDefinition, "project: k must be >= 1");
  }
  if (project.max_iterations <= 0) {
    return MakeError(ErrorKind::kInvalidDefinition, "project: max_iterations must be > 0");
  }
  return project;
}

absl::StatusOr<SuiteDefinition> LoadSuiteDefinition(const std::filesystem::path& path) {
  auto json = ReadJsonFile(path);
  if (!json.ok()) return json.status();
  return ParseSuiteDefinition(*json);
}

absl::StatusOr<TestSuite> LoadSuite(const std::filesystem::path& path) {
  auto definition = LoadSuiteDefinition(path);
  if (!definition.ok()) return definition.status();
  return MaterializeSuite(*definition);
}

absl::StatusOr<SuiteDefinition> LoadPool(const ProjectConfig& project) {
  return LoadSuiteDefinition(project.pool_path.value_or(project.suite_path));
}

absl::StatusOr<CoverageMap> LoadCoverage(const ProjectConfig& project,
                                         std::span<const TestInput> inputs) {
  const Json& json = project.coverage;
  if (!json.is_object() || !json.contains("criterion")) {
    return Missing("coverage.criterion");
  }
  auto kind = ParseCoverageKind(json["criterion"].get<std::string>());
  if (!kind.ok()) return kind.status();
  std::vector<std::string> ids;
  for (const auto& input : inputs) ids.push_back(input.id);

  if (json.contains("matrix")) {
    auto text = ReadTextFile(project.Resolve(json["matrix"].get<std::string>()).string());
    if (!text.ok()) return text.status();
    auto map = ParseCoverageMatrix(*text, *kind);
    if (!map.ok()) return map.status();
    return map->RestrictInputs(ids);
  }
  if (json.contains("spec")) {
    auto spec_json = ReadJsonFile(project.Resolve(json["spec"].get<std::string>()));
    if (!spec_json.ok()) return spec_json.status();
    auto spec = CategoryChoiceSpec::FromJson(*spec_json);
    if (!spec.ok()) return spec.status();
    return BuildCoverageMap(*spec, *kind, inputs);
  }
  return Missing("coverage.matrix or coverage.spec");
}

absl::StatusOr<SutAdapter> LoadSut(const ProjectConfig& project) {
  if (!project.sut) return Missing("sut");
  return SutAdapterFromJson(*project.sut, examples::ResolveBuiltin, project.dir.string());
}

absl::StatusOr<MutantSet> LoadMutants(const ProjectConfig& project) {
  if (!project.mutants_path) return Missing("mutants");
  auto json = ReadJsonFile(*project.mutants_path);
  if (!json.ok()) return json.status();
  const std::string base = project.mutants_path->parent_path().string();
  MutantSet set;
  try {
    if (json->contains("original")) {
      auto original = SutAdapterFromJson((*json)["original"], examples::ResolveBuiltin, base);
      if (!original.ok()) return original.status();
      set.original = *std::move(original);
    } else {
      auto original = LoadSut(project);
      if (!original.ok()) return original.status();
      set.original = *std::move(original);
    }
    for (const Json& entry : json->value("mutants", Json::array())) {
      auto sut = SutAdapterFromJson(entry.at("sut"), examples::ResolveBuiltin, base);
      if (!sut.ok()) return sut.status();
      set.mutants.push_back({entry.at("id").get<std::string>(), *std::move(sut)});
    }
  } catch (const Json::exception& e) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat(project.mutants_path->string(), ": ", e.what()));
  }
  if (auto status = ValidateMutantSet(set); !status.ok()) return status;
  return set;
}

}  // namespace mta::cli
