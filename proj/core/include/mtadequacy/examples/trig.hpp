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

#ifndef MTADEQUACY_EXAMPLES_TRIG_HPP_
#define MTADEQUACY_EXAMPLES_TRIG_HPP_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/coverage.hpp"
#include "mtadequacy/execution.hpp"
#include "mtadequacy/metrics.hpp"
#include "mtadequacy/model.hpp"
#include "mtadequacy/rational.hpp"

namespace mta::examples {

// Sine or cosine of an angle in degrees, selected by a flag. The mutants
// each carry one seeded fault.
enum class TrigVariant {
  kCorrect,
  kSignFlip,        // sine results negated
  kPeriodError,     // angles reduced modulo 350 instead of 360
  kFlagSwap,        // computes the other function
  kClampRemoval,    // negative angles are not wrapped into [0, 360)
  kConstantOutput,  // always prints 0
};

absl::string_view TrigVariantName(TrigVariant variant);  // "correct", "sign_flip", ...
absl::StatusOr<TrigVariant> ParseTrigVariant(absl::string_view name);
const std::vector<TrigVariant>& TrigMutantVariants();

double TrigCompute(double degrees, bool sine, TrigVariant variant = TrigVariant::kCorrect);

// Payload {"x": number, "flag": sine|cosine} -> "<value>\n".
absl::StatusOr<std::string> RunTrig(const Payload& payload,
                                    TrigVariant variant = TrigVariant::kCorrect);

SutAdapter TrigAdapter(TrigVariant variant = TrigVariant::kCorrect);
MutantSet TrigMutantSet();

TestInput TrigInput(std::string id, std::int64_t degrees, absl::string_view flag);

// MR1..MR5 as JSON definitions. The study extras add MR6 (sine,
// x' = 180 - x) and MR7 (cosine, x' = -x), both expecting equal outputs.
Json TrigRelationsJson(bool study_extras = false);
std::vector<MetamorphicRelation> TrigRelations(bool study_extras = false);

// Worked example: four source inputs, an eight-statement coverage matrix,
// six MGs and the association they induce.
std::vector<TestInput> WorkedExamplePool();
CoverageMap WorkedExampleCoverage();
std::vector<MetamorphicGroup> WorkedExampleMgs();
TestSuite WorkedExampleSuite();

struct GoldenWorkedExample {
  CoverageMap coverage;
  AssociationRelation coop;
  int k = 3;
  // Values as published alongside the example.
  Rational expected_degree;
  std::vector<Rational> expected_kappas;
};
GoldenWorkedExample GoldenWorkedExampleData();

// Larger pool and category-choice spec for trend studies: both flags,
// four quadrants, and negative, base and beyond-one-turn angle ranges.
std::vector<TestInput> TrigStudyPool();
CategoryChoiceSpec TrigStudySpec();

}  // namespace mta::examples

#endif  // MTADEQUACY_EXAMPLES_TRIG_HPP_
