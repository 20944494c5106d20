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

#include "mtadequacy/suite_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "mtadequacy/error.hpp"

namespace mta {
namespace {

absl::Status ParseFailure(absl::string_view message) {
  return MakeError(ErrorKind::kParseError, message);
}

absl::StatusOr<MetamorphicGroup> MgFromJson(const Json& json,
                                            std::span<const TestInput> inputs,
                                            std::span<const MetamorphicRelation> mrs) {
  if (!json.is_object() || !json.contains("mr") || !json["mr"].is_string() ||
      !json.contains("sources") || !json["sources"].is_array()) {
    return ParseFailure(absl::StrCat("MG needs mr and sources: ", json.dump()));
  }
  MetamorphicGroup mg;
  mg.mr_id = json["mr"].get<std::string>();
  for (const Json& s : json["sources"]) {
    if (!s.is_string()) return ParseFailure("MG sources must be input ids");
    mg.source_ids.push_back(s.get<std::string>());
  }
  mg.id = json.contains("id") ? json["id"].get<std::string>()
                              : absl::StrCat(mg.source_ids.empty() ? "" : mg.source_ids[0],
                                             ".", mg.mr_id);
  mg.seed = json.value("seed", std::uint64_t{0});
  if (json.contains("picks")) {
    for (const Json& p : json["picks"]) {
      if (!p.is_number()) return ParseFailure("MG picks must be numbers");
      mg.picks.push_back(p.get<double>());
    }
  }
  if (json.contains("followups")) {
    for (const Json& f : json["followups"]) {
      auto payload = PayloadFromJson(f);
      if (!payload.ok()) return payload.status();
      mg.followups.push_back(*std::move(payload));
    }
    return mg;
  }
  // Derive follow-ups when the file leaves them out.
  const MetamorphicRelation* mr = nullptr;
  for (const auto& m : mrs) {
    if (m.id == mg.mr_id) mr = &m;
  }
  if (!mr) {
    return MakeError(ErrorKind::kInvalidDefinition,
                     absl::StrCat("MG ", mg.id, " uses unknown MR ", mg.mr_id));
  }
  std::vector<TestInput> sources;
  for (const auto& id : mg.source_ids) {
    auto it = std::find_if(inputs.begin(), inputs.end(),
                           [&](const TestInput& t) { return t.id == id; });
    if (it == inputs.end()) {
      return MakeError(ErrorKind::kUnknownInputId,
                       absl::StrCat("MG ", mg.id, " uses unknown input ", id));
    }
    sources.push_back(*it);
  }
  auto followups = DeriveFollowups(*mr, sources, mg.derive_options());
  if (!followups.ok()) return followups.status();
  mg.followups = *std::move(followups);
  return mg;
}

}  // namespace

Json InputToJson(const TestInput& input) {
  return {{"id", input.id}, {"payload", PayloadToJson(input.payload)}};
}

absl::StatusOr<TestInput> InputFromJson(const Json& json) {
  if (!json.is_object() || !json.contains("id") || !json["id"].is_string() ||
      !json.contains("payload")) {
    return ParseFailure(absl::StrCat("input needs id and payload: ", json.dump()));
  }
  auto payload = PayloadFromJson(json["payload"]);
  if (!payload.ok()) return payload.status();
  return TestInput{json["id"].get<std::string>(), *std::move(payload)};
}

Json MgToJson(const MetamorphicGroup& mg) {
  Json out = Json::object();
  out["id"] = mg.id;
  out["mr"] = mg.mr_id;
  out["sources"] = mg.source_ids;
  Json followups = Json::array();
  for (const auto& f : mg.followups) followups.push_back(PayloadToJson(f));
  out["followups"] = std::move(followups);
  if (mg.seed != 0) out["seed"] = mg.seed;
  if (!mg.picks.empty()) out["picks"] = mg.picks;
  return out;
}

absl::StatusOr<SuiteDefinition> ParseSuiteDefinition(const Json& json,
                                                     const PluginRegistry* registry) {
  if (!json.is_object()) return ParseFailure("suite definition must be an object");
  SuiteDefinition def;
  for (const Json& item : json.value("inputs", Json::array())) {
    auto input = InputFromJson(item);
    if (!input.ok()) return input.status();
    def.inputs.push_back(*std::move(input));
  }
  for (const Json& item : json.value("mrs", Json::array())) {
    auto mr = RelationFromJson(item, registry);
    if (!mr.ok()) return mr.status();
    def.mrs.push_back(*std::move(mr));
  }
  const Json mgs = json.value("mgs", Json("auto"));
  if (mgs.is_string() && mgs.get<std::string>() == "auto") {
    return def;
  }
  if (mgs.is_object() && mgs.value("auto", false)) {
    def.auto_seed = mgs.value("seed", std::uint64_t{0});
    return def;
  }
  if (!mgs.is_array()) return ParseFailure("mgs must be a list or \"auto\"");
  def.mgs = std::vector<Json>(mgs.begin(), mgs.end());
  return def;
}

absl::StatusOr<std::vector<MetamorphicGroup>> AutoMgs(
    std::span<const TestInput> inputs, std::span<const MetamorphicRelation> mrs,
    std::uint64_t seed) {
  std::vector<MetamorphicGroup> out;
  for (const auto& mr : mrs) {
    if (mr.arity.num_source != 1) {
      return MakeError(ErrorKind::kInvalidDefinition,
                       absl::StrCat("MR ", mr.id,
                                    " takes several sources; list its MGs explicitly"));
    }
  }
  for (const auto& input : inputs) {
    for (const auto& mr : mrs) {
      auto eligible = IsEligible(mr, std::span(&input, 1));
      if (!eligible.ok()) return eligible.status();
      if (!*eligible) continue;
      auto mg = BuildMg(mr, std::span(&input, 1), absl::StrCat(input.id, ".", mr.id),
                        DeriveOptions{seed, {}});
      if (!mg.ok()) return mg.status();
      out.push_back(*std::move(mg));
    }
  }
  return out;
}

absl::StatusOr<TestSuite> MaterializeSuite(const SuiteDefinition& definition) {
  std::vector<MetamorphicGroup> mgs;
  if (!definition.mgs) {
    auto autos = AutoMgs(definition.inputs, definition.mrs, definition.auto_seed);
    if (!autos.ok()) return autos.status();
    mgs = *std::move(autos);
  } else {
    for (const Json& item : *definition.mgs) {
      auto mg = MgFromJson(item, definition.inputs, definition.mrs);
      if (!mg.ok()) return mg.status();
      mgs.push_back(*std::move(mg));
    }
  }
  return TestSuite::Create(definition.inputs, definition.mrs, std::move(mgs));
}

absl::StatusOr<TestSuite> ParseSuite(absl::string_view text,
                                     const PluginRegistry* registry) {
  auto json = ParseJsonText(text, "suite definition");
  if (!json.ok()) return json.status();
  auto def = ParseSuiteDefinition(*json, registry);
  if (!def.ok()) return def.status();
  return MaterializeSuite(*def);
}

Json SuiteToJson(const TestSuite& suite) {
  Json inputs = Json::array(), mrs = Json::array(), mgs = Json::array();
  for (const auto& input : suite.inputs()) inputs.push_back(InputToJson(input));
  for (const auto& mr : suite.mrs()) mrs.push_back(RelationToJson(mr));
  for (const auto& mg : suite.mgs()) mgs.push_back(MgToJson(mg));
  Json out = Json::object();
  out["inputs"] = std::move(inputs);
  out["mrs"] = std::move(mrs);
  out["mgs"] = std::move(mgs);
  return out;
}

std::string SerializeSuite(const TestSuite& suite) {
  return SuiteToJson(suite).dump(2) + "\n";
}

absl::StatusOr<Json> ParseJsonText(absl::string_view text, absl::string_view what) {
  Json json = Json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) return ParseFailure(absl::StrCat(what, " is not valid JSON"));
  return json;
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kParseError, absl::StrCat("cannot read ", path));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteTextFile(const std::string& path, absl::string_view content) {
  std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return MakeError(ErrorKind::kParseError, absl::StrCat("cannot write ", path));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) return MakeError(ErrorKind::kParseError, absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace mta
