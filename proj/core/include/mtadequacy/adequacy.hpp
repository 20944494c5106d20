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

#ifndef MTADEQUACY_ADEQUACY_HPP_
#define MTADEQUACY_ADEQUACY_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/coverage.hpp"
#include "mtadequacy/model.hpp"
#include "mtadequacy/rational.hpp"

namespace mta {

enum class Distinctness { kById, kByOutputClass };

absl::string_view DistinctnessName(Distinctness mode);  // "by-id", "by-output-class"
absl::StatusOr<Distinctness> ParseDistinctness(absl::string_view name);

struct AdequacyConfig {
  int k = 1;
  Distinctness distinctness = Distinctness::kById;
  // MR id -> output class; consulted in by-output-class mode. MRs without
  // an entry form a class of their own.
  std::map<std::string, std::string, std::less<>> output_classes;
};

// Output classes of the MRs that declare one.
std::map<std::string, std::string, std::less<>> OutputClassesOf(
    std::span<const MetamorphicRelation> mrs);

// The MRs associated with `input_id`, projected onto output classes in
// by-output-class mode.
std::set<std::string> MrsCoveredBy(absl::string_view input_id,
                                   const AssociationRelation& coop,
                                   const AdequacyConfig& cfg = {});

// min(n, 1).
Rational Epsilon(const Rational& n);

// 0 for an empty set, otherwise the best clamped ratio |covered(t)| / k.
Rational Kappa(std::span<const std::string> sat_inputs,
               const AssociationRelation& coop, const AdequacyConfig& cfg);

struct RequirementScore {
  std::string requirement_id;
  Rational kappa;
  // Best input; ties go to the smallest id. Empty when nothing satisfies
  // the requirement.
  std::optional<std::string> witness;
  int witness_mrs = 0;
};

struct AdequacyReport {
  int k = 1;
  Distinctness distinctness = Distinctness::kById;
  Rational degree;
  std::vector<RequirementScore> per_requirement;
  std::vector<std::string> infeasible;
  bool satisfied = false;

  std::int64_t num_requirements() const {
    return static_cast<std::int64_t>(per_requirement.size());
  }
  // Exact fraction; zero renders over the requirement count.
  std::string DegreeFraction() const;
};

// EmptyRequirementSet when the map has no requirements; InvalidDefinition
// when k < 1.
absl::StatusOr<AdequacyReport> MeasureAdequacy(const CoverageMap& coverage,
                                               const AssociationRelation& coop,
                                               const AdequacyConfig& cfg);

// Every requirement has a satisfying input associated with >= k MRs.
absl::StatusOr<bool> CriterionSatisfied(const CoverageMap& coverage,
                                        const AssociationRelation& coop,
                                        const AdequacyConfig& cfg);

std::string FormatReportText(const AdequacyReport& report);
// "requirement_id,kappa,witness,witness_mrs" rows.
std::string FormatReportCsv(const AdequacyReport& report);

}  // namespace mta

#endif  // MTADEQUACY_ADEQUACY_HPP_
