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

#include "mtadequacy/model.hpp"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "mtadequacy/error.hpp"

namespace mta {
namespace {

absl::Status Invalid(absl::string_view message) {
  return MakeError(ErrorKind::kInvalidDefinition, message);
}

}  // namespace

absl::Status ValidateRelation(const MetamorphicRelation& mr) {
  if (!IsValidId(mr.id)) return Invalid(absl::StrCat("bad MR id '", mr.id, "'"));
  if (mr.arity.num_source < 1 || mr.arity.num_followup < 1) {
    return Invalid(absl::StrCat("MR ", mr.id, ": arity components must be >= 1"));
  }
  if (mr.input_relation.num_followups() != mr.arity.num_followup) {
    return Invalid(absl::StrCat("MR ", mr.id, ": transform yields ",
                                mr.input_relation.num_followups(),
                                " follow-ups but arity says ",
                                mr.arity.num_followup));
  }
  if (mr.input_relation.min_sources() > mr.arity.num_source) {
    return Invalid(absl::StrCat("MR ", mr.id,
                                ": transform reads more sources than its arity"));
  }
  if (mr.output_relation.tolerance() < 0) {
    return Invalid(absl::StrCat("MR ", mr.id, ": negative tolerance"));
  }
  return absl::OkStatus();
}

Json RelationToJson(const MetamorphicRelation& mr) {
  Json out = Json::object();
  out["id"] = mr.id;
  out["arity"] = Json::array({mr.arity.num_source, mr.arity.num_followup});
  if (mr.output_class) out["output_class"] = *mr.output_class;
  out["eligibility"] = mr.eligibility.ToJson();
  out["transform"] = mr.input_relation.ToJson();
  out["relation"] = mr.output_relation.ToJson();
  return out;
}

absl::StatusOr<MetamorphicRelation> RelationFromJson(
    const Json& json, const PluginRegistry* registry) {
  if (!json.is_object() || !json.contains("id") || !json["id"].is_string()) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("MR needs an id: ", json.dump()));
  }
  MetamorphicRelation mr;
  mr.id = json["id"].get<std::string>();
  if (json.contains("arity")) {
    const Json& arity = json["arity"];
    if (!arity.is_array() || arity.size() != 2 || !arity[0].is_number_integer() ||
        !arity[1].is_number_integer()) {
      return MakeError(ErrorKind::kParseError,
                       absl::StrCat("MR ", mr.id, ": arity must be [sources, followups]"));
    }
    mr.arity = {arity[0].get<int>(), arity[1].get<int>()};
  }
  if (json.contains("output_class")) {
    mr.output_class = json["output_class"].get<std::string>();
  }
  if (json.contains("eligibility")) {
    auto cond = Condition::FromJson(json["eligibility"]);
    if (!cond.ok()) return cond.status();
    mr.eligibility = *std::move(cond);
  }
  if (!json.contains("transform") || !json.contains("relation")) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("MR ", mr.id, " needs transform and relation"));
  }
  auto transform = InputTransform::FromJson(json["transform"], registry);
  if (!transform.ok()) return transform.status();
  mr.input_relation = *std::move(transform);
  auto relation = OutputRelation::FromJson(json["relation"], registry);
  if (!relation.ok()) return relation.status();
  mr.output_relation = *std::move(relation);
  if (auto status = ValidateRelation(mr); !status.ok()) return status;
  return mr;
}

absl::StatusOr<bool> IsEligible(const MetamorphicRelation& mr,
                                std::span<const TestInput> sources) {
  if (static_cast<int>(sources.size()) != mr.arity.num_source) return false;
  for (const auto& source : sources) {
    auto ok = mr.eligibility.Evaluate(source.payload);
    if (!ok.ok() || !*ok) return ok;
  }
  return true;
}

absl::StatusOr<std::vector<Payload>> DeriveFollowups(
    const MetamorphicRelation& mr, std::span<const TestInput> sources,
    const DeriveOptions& options) {
  if (static_cast<int>(sources.size()) != mr.arity.num_source) {
    return MakeError(ErrorKind::kIneligibleSource,
                     absl::StrCat("MR ", mr.id, " takes ", mr.arity.num_source,
                                  " source(s), got ", sources.size()));
  }
  for (const auto& source : sources) {
    auto ok = mr.eligibility.Evaluate(source.payload);
    if (!ok.ok()) return ok.status();
    if (!*ok) {
      return MakeError(ErrorKind::kIneligibleSource,
                       absl::StrCat("input ", source.id, " is not eligible for ", mr.id));
    }
  }
  std::vector<Payload> payloads;
  payloads.reserve(sources.size());
  for (const auto& source : sources) payloads.push_back(source.payload);
  auto followups = mr.input_relation.Apply(payloads, options);
  if (!followups.ok()) return followups.status();
  if (static_cast<int>(followups->size()) != mr.arity.num_followup) {
    return MakeError(ErrorKind::kTransformFailure,
                     absl::StrCat("MR ", mr.id, " produced ", followups->size(),
                                  " follow-ups"));
  }
  return followups;
}

absl::StatusOr<MetamorphicGroup> BuildMg(const MetamorphicRelation& mr,
                                         std::span<const TestInput> sources,
                                         std::string id,
                                         const DeriveOptions& options) {
  auto followups = DeriveFollowups(mr, sources, options);
  if (!followups.ok()) return followups.status();
  MetamorphicGroup mg;
  mg.id = std::move(id);
  mg.mr_id = mr.id;
  for (const auto& s : sources) mg.source_ids.push_back(s.id);
  mg.followups = *std::move(followups);
  mg.seed = options.seed;
  mg.picks = options.picks;
  return mg;
}

bool AssociationRelation::Insert(std::string input_id, std::string mr_id) {
  return pairs_.emplace(std::move(input_id), std::move(mr_id)).second;
}

bool AssociationRelation::Contains(absl::string_view input_id,
                                   absl::string_view mr_id) const {
  return pairs_.contains(Pair(std::string(input_id), std::string(mr_id)));
}

std::vector<std::string> AssociationRelation::MrsOf(absl::string_view input_id) const {
  std::vector<std::string> out;
  for (auto it = pairs_.lower_bound(Pair(std::string(input_id), std::string()));
       it != pairs_.end() && it->first == input_id; ++it) {
    out.push_back(it->second);
  }
  return out;
}

AssociationRelation BuildAssociation(std::span<const MetamorphicGroup> mgs) {
  AssociationRelation coop;
  for (const auto& mg : mgs) {
    for (const auto& source : mg.source_ids) coop.Insert(source, mg.mr_id);
  }
  return coop;
}

absl::StatusOr<TestSuite> TestSuite::Create(std::vector<TestInput> inputs,
                                            std::vector<MetamorphicRelation> mrs,
                                            std::vector<MetamorphicGroup> mgs) {
  TestSuite suite;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!IsValidId(inputs[i].id)) {
      return Invalid(absl::StrCat("bad input id '", inputs[i].id, "'"));
    }
    if (!suite.input_index_.emplace(inputs[i].id, i).second) {
      return Invalid(absl::StrCat("duplicate input id ", inputs[i].id));
    }
  }
  for (std::size_t i = 0; i < mrs.size(); ++i) {
    if (auto status = ValidateRelation(mrs[i]); !status.ok()) return status;
    if (!suite.mr_index_.emplace(mrs[i].id, i).second) {
      return Invalid(absl::StrCat("duplicate MR id ", mrs[i].id));
    }
  }
  suite.inputs_ = std::move(inputs);
  suite.mrs_ = std::move(mrs);

  std::sort(mgs.begin(), mgs.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::set<std::string> used_inputs, used_mrs;
  for (std::size_t i = 0; i < mgs.size(); ++i) {
    const MetamorphicGroup& mg = mgs[i];
    if (!IsValidId(mg.id)) return Invalid(absl::StrCat("bad MG id '", mg.id, "'"));
    if (i > 0 && mgs[i - 1].id == mg.id) {
      return Invalid(absl::StrCat("duplicate MG id ", mg.id));
    }
    const MetamorphicRelation* mr = suite.FindRelation(mg.mr_id);
    if (!mr) return Invalid(absl::StrCat("MG ", mg.id, " uses unknown MR ", mg.mr_id));
    if (static_cast<int>(mg.source_ids.size()) != mr->arity.num_source ||
        static_cast<int>(mg.followups.size()) != mr->arity.num_followup) {
      return Invalid(absl::StrCat("MG ", mg.id, " does not match the arity of ", mr->id));
    }
    for (const auto& source : mg.source_ids) {
      if (!suite.FindInput(source)) {
        return MakeError(ErrorKind::kUnknownInputId,
                         absl::StrCat("MG ", mg.id, " uses unknown input ", source));
      }
      used_inputs.insert(source);
    }
    used_mrs.insert(mg.mr_id);
    auto replay = DeriveFollowups(*mr, suite.SourcesOf(mg), mg.derive_options());
    if (!replay.ok()) return replay.status();
    if (*replay != mg.followups) {
      return Invalid(absl::StrCat("MG ", mg.id,
                                  ": follow-ups differ from what ", mr->id,
                                  " derives"));
    }
  }
  for (const auto& input : suite.inputs_) {
    if (!used_inputs.contains(input.id)) {
      return Invalid(absl::StrCat("input ", input.id, " appears in no MG"));
    }
  }
  for (const auto& mr : suite.mrs_) {
    if (!used_mrs.contains(mr.id)) {
      return Invalid(absl::StrCat("MR ", mr.id, " appears in no MG"));
    }
  }
  suite.mgs_ = std::move(mgs);
  return suite;
}

const TestInput* TestSuite::FindInput(absl::string_view id) const {
  auto it = input_index_.find(id);
  return it == input_index_.end() ? nullptr : &inputs_[it->second];
}

const MetamorphicRelation* TestSuite::FindRelation(absl::string_view id) const {
  auto it = mr_index_.find(id);
  return it == mr_index_.end() ? nullptr : &mrs_[it->second];
}

std::vector<TestInput> TestSuite::SourcesOf(const MetamorphicGroup& mg) const {
  std::vector<TestInput> sources;
  for (const auto& id : mg.source_ids) {
    if (const TestInput* input = FindInput(id)) sources.push_back(*input);
  }
  return sources;
}

}  // namespace mta
