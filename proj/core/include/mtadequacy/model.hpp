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

#ifndef MTADEQUACY_MODEL_HPP_
#define MTADEQUACY_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "mtadequacy/condition.hpp"
#include "mtadequacy/relation.hpp"
#include "mtadequacy/value.hpp"

namespace mta {

struct Arity {
  int num_source = 1;
  int num_followup = 1;

  friend bool operator==(const Arity&, const Arity&) = default;
};

// A metamorphic relation split into an input subrelation (how follow-ups are
// built) and an output subrelation (what must hold between outputs).
struct MetamorphicRelation {
  std::string id;
  Arity arity;
  InputTransform input_relation;
  OutputRelation output_relation;
  // Which source payloads the relation applies to.
  Condition eligibility;
  // Names the form of the output subrelation; used when MRs are counted by
  // form instead of by identity.
  std::optional<std::string> output_class;
};

// Checks id syntax, arity >= 1 and arity/transform agreement.
absl::Status ValidateRelation(const MetamorphicRelation& mr);

Json RelationToJson(const MetamorphicRelation& mr);
absl::StatusOr<MetamorphicRelation> RelationFromJson(
    const Json& json, const PluginRegistry* registry = nullptr);

// Source inputs by id plus follow-up payloads derived from them.
struct MetamorphicGroup {
  std::string id;
  std::string mr_id;
  std::vector<std::string> source_ids;
  std::vector<Payload> followups;
  std::uint64_t seed = 0;
  std::vector<double> picks;

  DeriveOptions derive_options() const { return {seed, picks}; }
  friend bool operator==(const MetamorphicGroup&, const MetamorphicGroup&) = default;
};

// True when every source satisfies the MR's eligibility predicate and the
// source count matches the arity.
absl::StatusOr<bool> IsEligible(const MetamorphicRelation& mr,
                                std::span<const TestInput> sources);

// IneligibleSource or TransformFailure on error.
absl::StatusOr<std::vector<Payload>> DeriveFollowups(
    const MetamorphicRelation& mr, std::span<const TestInput> sources,
    const DeriveOptions& options = {});

absl::StatusOr<MetamorphicGroup> BuildMg(const MetamorphicRelation& mr,
                                         std::span<const TestInput> sources,
                                         std::string id,
                                         const DeriveOptions& options = {});

// Binary relation between source inputs and MRs, with set semantics.
class AssociationRelation {
 public:
  using Pair = std::pair<std::string, std::string>;  // (input id, MR id)

  AssociationRelation() = default;
  explicit AssociationRelation(std::set<Pair> pairs) : pairs_(std::move(pairs)) {}

  bool Insert(std::string input_id, std::string mr_id);
  bool Contains(absl::string_view input_id, absl::string_view mr_id) const;
  // MR ids associated with one input, in id order.
  std::vector<std::string> MrsOf(absl::string_view input_id) const;

  const std::set<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const AssociationRelation&,
                         const AssociationRelation&) = default;

 private:
  std::set<Pair> pairs_;
};

AssociationRelation BuildAssociation(std::span<const MetamorphicGroup> mgs);

// The triple of source inputs, MRs and MGs. Create() enforces referential
// integrity, MG arity, replay determinism of every MG, and the basic
// assumptions that each input and each MR takes part in at least one MG.
class TestSuite {
 public:
  static absl::StatusOr<TestSuite> Create(std::vector<TestInput> inputs,
                                          std::vector<MetamorphicRelation> mrs,
                                          std::vector<MetamorphicGroup> mgs);

  const std::vector<TestInput>& inputs() const { return inputs_; }
  const std::vector<MetamorphicRelation>& mrs() const { return mrs_; }
  // Sorted by MG id.
  const std::vector<MetamorphicGroup>& mgs() const { return mgs_; }

  const TestInput* FindInput(absl::string_view id) const;
  const MetamorphicRelation* FindRelation(absl::string_view id) const;
  // Source inputs of an MG in order; the MG must belong to this suite.
  std::vector<TestInput> SourcesOf(const MetamorphicGroup& mg) const;

  AssociationRelation Association() const { return BuildAssociation(mgs_); }

 private:
  TestSuite() = default;

  std::vector<TestInput> inputs_;
  std::vector<MetamorphicRelation> mrs_;
  std::vector<MetamorphicGroup> mgs_;
  std::map<std::string, std::size_t, std::less<>> input_index_;
  std::map<std::string, std::size_t, std::less<>> mr_index_;
};

}  // namespace mta

#endif  // MTADEQUACY_MODEL_HPP_
