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

#include "mtadequacy/metrics.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mtadequacy/examples/trig.hpp"
#include "mtadequacy/generation.hpp"
#include "test_util.hpp"

namespace mta {
namespace {

using ::mta::testing::HasErrorKind;
using ::mta::testing::IsOk;
using ::testing::ElementsAre;
using ::testing::UnorderedElementsAreArray;

std::set<std::string> Violated(const std::vector<MgVerdict>& verdicts) {
  std::set<std::string> out;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::kViolated) out.insert(v.mg_id);
  }
  return out;
}

TEST(FdeTest, WorkedExampleMutantTable) {
  MTA_ASSERT_OK_AND_ASSIGN(auto result,
                           Fde(examples::WorkedExampleSuite(), examples::TrigMutantSet()));
  // Violated MGs per mutant, worked out by hand from the MG follow-ups.
  const std::map<std::string, std::set<std::string>> expected = {
      {"sign_flip", {"t3.MR3"}},
      {"period_error", {"t1.MR1", "t2.MR2"}},
      {"flag_swap", {"t2.MR2", "t3.MR3", "t4.MR4"}},
      {"clamp_removal", {}},
      {"constant_output", {"t4.MR5"}},
  };
  ASSERT_EQ(result.verdicts.size(), expected.size());
  int detected = 0;
  for (const auto& [mutant, verdicts] : result.verdicts) {
    EXPECT_EQ(Violated(verdicts), expected.at(mutant)) << mutant;
    detected += !expected.at(mutant).empty();
  }
  EXPECT_EQ(result.fde, Rational(detected, 5));
  EXPECT_EQ(result.fde, Rational(4, 5));
}

TEST(FdeTest, OriginalProgramViolatesNothing) {
  MutantSet set{.original = examples::TrigAdapter(),
                .mutants = {{"same", examples::TrigAdapter()}}};
  MTA_ASSERT_OK_AND_ASSIGN(auto result, Fde(examples::WorkedExampleSuite(), set));
  EXPECT_EQ(result.fde, Rational(0));
}

TEST(FdeTest, CrashesCountOnlyWhenAsked) {
  SutAdapter crashing{.id = "crash", .callback = [](const Payload&) -> absl::StatusOr<std::string> {
                        return absl::InternalError("segfault");
                      }};
  MutantSet set{.original = examples::TrigAdapter(), .mutants = {{"crash", crashing}}};
  MTA_ASSERT_OK_AND_ASSIGN(auto quiet, Fde(examples::WorkedExampleSuite(), set));
  EXPECT_EQ(quiet.fde, Rational(0));
  MTA_ASSERT_OK_AND_ASSIGN(
      auto loud, Fde(examples::WorkedExampleSuite(), set, {.crash_counts = true}));
  EXPECT_EQ(loud.fde, Rational(1));
}

TEST(FdeTest, Errors) {
  EXPECT_THAT(Fde(examples::WorkedExampleSuite(), {.original = examples::TrigAdapter()}),
              HasErrorKind(ErrorKind::kEmptyMutantSet));
  MutantSet dup{.original = examples::TrigAdapter(),
                .mutants = {{"a", examples::TrigAdapter()}, {"a", examples::TrigAdapter()}}};
  EXPECT_THAT(ValidateMutantSet(dup), HasErrorKind(ErrorKind::kInvalidDefinition));
  EXPECT_THAT(Fde(examples::WorkedExampleSuite(), dup),
              HasErrorKind(ErrorKind::kInvalidDefinition));
}

TEST(DetectsTest, ViolationsAndErrors) {
  const std::vector<MgVerdict> errored{{.mg_id = "a", .status = VerdictStatus::kExecutionError}};
  EXPECT_FALSE(Detects(errored));
  EXPECT_TRUE(Detects(errored, {.crash_counts = true}));
  const std::vector<MgVerdict> violated{{.mg_id = "a", .status = VerdictStatus::kSatisfied},
                                        {.mg_id = "b", .status = VerdictStatus::kViolated}};
  EXPECT_TRUE(Detects(violated));
  EXPECT_FALSE(Detects(std::vector<MgVerdict>{}));
}

TEST(FdrTest, FractionOfSuitesDetecting) {
  VerdictStore store;
  const std::vector<MgVerdict> hit{{.mg_id = "a", .status = VerdictStatus::kViolated}};
  const std::vector<MgVerdict> miss{{.mg_id = "a", .status = VerdictStatus::kSatisfied}};
  const std::vector<MgVerdict> crash{{.mg_id = "a", .status = VerdictStatus::kExecutionError}};
  store.Record("s1", "m", hit);
  store.Record("s2", "m", miss);
  store.Record("s3", "m", crash);
  const std::vector<std::string> suites{"s1", "s2", "s3"};
  EXPECT_EQ(*Fdr("m", suites, store), Rational(1, 3));
  EXPECT_EQ(*Fdr("m", suites, store, {.crash_counts = true}), Rational(2, 3));
  // Unrecorded pairs count as not detected.
  const std::vector<std::string> with_unknown{"s1", "s9"};
  EXPECT_EQ(*Fdr("m", with_unknown, store), Rational(1, 2));
  EXPECT_THAT(Fdr("m", std::vector<std::string>{}, store), HasErrorKind(ErrorKind::kNoSuites));
  EXPECT_THAT(store.SuiteIds(), ElementsAre("s1", "s2", "s3"));
  EXPECT_THAT(store.MutantIds(), ElementsAre("m"));
}

// Counting detections per suite (FDE) and per mutant (FDR) visits the same
// (suite, mutant) cells.
TEST(FdrTest, DetectionCountsAgreeBothWays) {
  const auto coverage = examples::WorkedExampleCoverage();
  const auto mutants = examples::TrigMutantSet();
  VerdictStore store;
  std::vector<std::string> suite_ids;
  Rational fde_sum(0);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto generated = GenerateSuiteInLevel(
        coverage, {.k = 2}, {Rational(seed - 1, 6), Rational(seed, 6)},
        {.seed = seed, .pool = examples::WorkedExamplePool(), .mr_pool = examples::TrigRelations()});
    if (!generated.ok()) continue;
    const std::string id = "suite" + std::to_string(seed);
    MTA_ASSERT_OK_AND_ASSIGN(auto fde, Fde(generated->suite, mutants, {}, 1, &store, id));
    fde_sum += fde.fde;
    suite_ids.push_back(id);
  }
  ASSERT_GE(suite_ids.size(), 3u);
  EXPECT_THAT(store.SuiteIds(), UnorderedElementsAreArray(suite_ids));
  Rational fdr_sum(0);
  for (const auto& m : mutants.mutants) {
    MTA_ASSERT_OK_AND_ASSIGN(auto fdr, Fdr(m.id, suite_ids, store));
    fdr_sum += fdr;
  }
  const auto n_suites = static_cast<std::int64_t>(suite_ids.size());
  const auto n_mutants = static_cast<std::int64_t>(mutants.mutants.size());
  EXPECT_EQ(fde_sum * Rational(n_mutants), fdr_sum * Rational(n_suites));
}

}  // namespace
}  // namespace mta
