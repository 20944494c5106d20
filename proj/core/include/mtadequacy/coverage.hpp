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

#ifndef MTADEQUACY_COVERAGE_HPP_
#define MTADEQUACY_COVERAGE_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/condition.hpp"
#include "mtadequacy/value.hpp"

namespace mta {

enum class CoverageKind { kIChoice, kIChoicePair, kIoCtf, kStatement, kBranch };

// "i-choice", "i-choice-pair", "io-ctf", "statement", "branch".
absl::string_view CoverageKindName(CoverageKind kind);
absl::StatusOr<CoverageKind> ParseCoverageKind(absl::string_view name);

struct Choice {
  std::string name;
  Condition predicate;
};

struct Category {
  std::string name;
  std::vector<Choice> choices;
};

// A complete test frame: one choice for each applicable input category and
// one for each applicable output category, as (category, choice) pairs.
struct TestFrame {
  std::string id;
  std::vector<std::pair<std::string, std::string>> i_choices;
  std::vector<std::pair<std::string, std::string>> o_choices;
};

// Category-choice specification. JSON layout:
//   {"i_categories": [{"name": c, "choices": [{"name": n, "when": cond}]}],
//    "o_categories": [...same...],
//    "frames": [{"id": f, "i": {cat: choice, ...}, "o": {cat: choice, ...}}]}
// Output choices are predicates over the input payload that describe the
// expected output; "when" defaults to true.
class CategoryChoiceSpec {
 public:
  static absl::StatusOr<CategoryChoiceSpec> FromJson(const Json& json);
  Json ToJson() const;

  const std::vector<Category>& i_categories() const { return i_categories_; }
  const std::vector<Category>& o_categories() const { return o_categories_; }
  const std::vector<TestFrame>& frames() const { return frames_; }

 private:
  std::vector<Category> i_categories_;
  std::vector<Category> o_categories_;
  std::vector<TestFrame> frames_;
};

struct TestRequirement {
  std::string id;
  CoverageKind kind = CoverageKind::kIChoice;
  // Covered element: one choice ("cat.choice"), two choices, a frame id, or
  // a source location id.
  std::vector<std::string> descriptor;

  friend bool operator==(const TestRequirement&, const TestRequirement&) = default;
};

// Requirement ids: "cat.choice" for i-choice, "catA.x__catB.y" for
// i-choice-pair (declaration order), the frame id for io-ctf.
// UnsupportedCriterion for statement and branch.
absl::StatusOr<std::vector<TestRequirement>> EnumerateRequirements(
    const CategoryChoiceSpec& spec, CoverageKind kind);

// Complete boolean matrix sat(input, requirement).
class CoverageMap {
 public:
  // `sat` has one row per input, one column per requirement.
  static absl::StatusOr<CoverageMap> Create(
      CoverageKind kind, std::vector<TestRequirement> requirements,
      std::vector<std::string> input_ids, std::vector<std::vector<bool>> sat);

  CoverageKind kind() const { return kind_; }
  const std::vector<TestRequirement>& requirements() const { return requirements_; }
  const std::vector<std::string>& input_ids() const { return input_ids_; }

  bool Sat(std::size_t input, std::size_t requirement) const {
    return sat_[input][requirement];
  }
  // False for unknown ids.
  bool Sat(absl::string_view input_id, absl::string_view requirement_id) const;
  // Ids of the inputs satisfying one requirement, in row order.
  std::vector<std::string> SatisfyingInputs(std::size_t requirement) const;
  // Requirements no input satisfies.
  std::vector<std::string> InfeasibleRequirements() const;

  // Keeps only the listed inputs, in the given order. UnknownInputId if one
  // is not a row of this map.
  absl::StatusOr<CoverageMap> RestrictInputs(std::span<const std::string> ids) const;
  // Drops the listed requirements.
  CoverageMap WithoutRequirements(std::span<const std::string> ids) const;

  friend bool operator==(const CoverageMap&, const CoverageMap&) = default;

 private:
  CoverageMap() = default;

  CoverageKind kind_ = CoverageKind::kStatement;
  std::vector<TestRequirement> requirements_;
  std::vector<std::string> input_ids_;
  std::vector<std::vector<bool>> sat_;
};

// MissingField when a predicate needs an absent field; AmbiguousChoice when
// an input matches two choices of one category.
absl::StatusOr<CoverageMap> BuildCoverageMap(const CategoryChoiceSpec& spec,
                                             CoverageKind kind,
                                             std::span<const TestInput> inputs);

// Matrix text: header "input_id,<req>,...", then "<input>,0|1,..." rows.
// ParseError on malformed text; UnknownInputId when `known_inputs` is
// nonempty and a row names an input outside it.
absl::StatusOr<CoverageMap> ParseCoverageMatrix(
    absl::string_view text, CoverageKind kind = CoverageKind::kStatement,
    std::span<const std::string> known_inputs = {});
std::string SerializeCoverageMatrix(const CoverageMap& map);

}  // namespace mta

#endif  // MTADEQUACY_COVERAGE_HPP_
