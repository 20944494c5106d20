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

#ifndef MTADEQUACY_GENERATION_HPP_
#define MTADEQUACY_GENERATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/adequacy.hpp"
#include "mtadequacy/coverage.hpp"
#include "mtadequacy/model.hpp"
#include "mtadequacy/rational.hpp"

namespace mta {

// Half-open adequacy interval (lower, upper].
struct AdequacyLevel {
  Rational lower;
  Rational upper;
};

// InvalidDefinition unless 0 <= lower < upper <= 1.
absl::Status ValidateLevel(const AdequacyLevel& level);
// "lo,hi" with fractions or decimals, e.g. "0.4,0.5" or "2/5,1/2".
absl::StatusOr<AdequacyLevel> ParseLevel(absl::string_view text);
std::string LevelToString(const AdequacyLevel& level);

struct GenerationBudget {
  // 0 keeps the (input id, MR id) order for ties; any other value draws a
  // fixed permutation of the candidates from this seed.
  std::uint64_t seed = 0;
  // Caps greedy steps and the nodes of the exact fallback search.
  std::int64_t max_iterations = 100000;
  std::vector<TestInput> pool;
  std::vector<MetamorphicRelation> mr_pool;
};

struct GenerationStep {
  std::string input_id;
  std::string mr_id;
  Rational degree;
};

struct GenerationResult {
  TestSuite suite;
  AdequacyReport report;
  std::vector<GenerationStep> trace;
  // The greedy pass stalled and the exact search produced the suite.
  bool used_search = false;
};

// Degree when every eligible (input, MR) pair is associated. Only MRs with
// one source take part in generation.
absl::StatusOr<Rational> MaxAchievableDegree(const CoverageMap& coverage,
                                             const AdequacyConfig& cfg,
                                             const GenerationBudget& budget);

// Covers every feasible requirement with an input associated with k MRs.
// Unachievable, naming the blocking requirements, when some feasible
// requirement has no pool input eligible for k distinct MRs.
absl::StatusOr<GenerationResult> GenerateSatisfyingSuite(const CoverageMap& coverage,
                                                         const AdequacyConfig& cfg,
                                                         const GenerationBudget& budget);

// Greedily adds the association with the largest gain that keeps the degree
// at or below level.upper until the degree exceeds level.lower. If no such
// step exists first, a bounded exact search over per-input association
// counts takes over. Infeasible when the maximum achievable degree is at
// most level.lower or the search proves no count vector lands in the level;
// Overshoot when the search budget runs out first.
absl::StatusOr<GenerationResult> GenerateSuiteInLevel(const CoverageMap& coverage,
                                                      const AdequacyConfig& cfg,
                                                      const AdequacyLevel& level,
                                                      const GenerationBudget& budget);

}  // namespace mta

#endif  // MTADEQUACY_GENERATION_HPP_
