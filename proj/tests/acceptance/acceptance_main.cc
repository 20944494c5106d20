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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mtadequacy/adequacy.hpp"
#include "mtadequacy/coverage.hpp"
#include "mtadequacy/error.hpp"
#include "mtadequacy/examples/lexer.hpp"
#include "mtadequacy/examples/trig.hpp"
#include "mtadequacy/generation.hpp"
#include "mtadequacy/metrics.hpp"
#include "mtadequacy/suite_io.hpp"
#include "oracle/oracle.hpp"

namespace mta {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure notes; the criterion passes when none were added.
class Notes {
 public:
  void Fail(std::string note) {
    if (notes_.size() < 8) notes_.push_back(std::move(note));
    ++failures_;
  }
  void Check(bool ok, const std::function<std::string()>& note) {
    if (!ok) Fail(note());
  }
  Outcome Finish(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, absl::StrCat(summary, "; ", failures_, " failure(s): ",
                                absl::StrJoin(notes_, "; "))};
  }

 private:
  std::vector<std::string> notes_;
  int failures_ = 0;
};

Rational ToRational(const oracle::Fraction& f) { return Rational(f.num, f.den); }

std::string Join(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(ToString(v));
  return absl::StrCat("(", absl::StrJoin(parts, ", "), ")");
}

// ---- criteria ----

Outcome WorkedExampleExactness() {
  const auto golden = examples::GoldenWorkedExampleData();
  auto report = MeasureAdequacy(golden.coverage, golden.coop, {.k = golden.k});
  if (!report.ok()) return {false, std::string(report.status().message())};
  std::vector<Rational> kappas;
  for (const auto& s : report->per_requirement) kappas.push_back(s.kappa);
  Notes notes;
  notes.Check(report->degree == golden.expected_degree, [&] {
    return absl::StrCat("degree ", ToString(report->degree), ", expected ",
                        ToString(golden.expected_degree));
  });
  for (std::size_t r = 0; r < kappas.size() && r < golden.expected_kappas.size(); ++r) {
    notes.Check(kappas[r] == golden.expected_kappas[r], [&] {
      return absl::StrCat("K(", report->per_requirement[r].requirement_id, ") = ",
                          ToString(kappas[r]), ", expected ", ToString(golden.expected_kappas[r]));
    });
  }
  // The reference evaluator agrees with the library, not with the
  // published figures.
  const auto reference = oracle::Degree(oracle::WorkedExampleInstance(golden.k));
  return notes.Finish(absl::StrCat("k=", golden.k, " degree ", ToString(report->degree),
                                   " K=", Join(kappas), ", reference evaluator ",
                                   oracle::ToString(reference)));
}

Outcome OracleEquivalence() {
  constexpr std::uint64_t kSeed = 20260419;
  constexpr int kInstances = 1000;
  std::mt19937_64 rng(kSeed);
  const oracle::RandomShape shape{.max_inputs = 6, .max_requirements = 8, .max_mrs = 6,
                                  .max_k = 4};
  Notes notes;
  for (int n = 0; n < kInstances; ++n) {
    const auto inst = oracle::RandomInstance(rng, shape);
    const auto coverage = oracle::ToCoverageMap(inst);
    const auto coop = oracle::ToAssociation(inst);
    const auto cfg = oracle::ToConfig(inst);
    auto report = MeasureAdequacy(coverage, coop, cfg);
    auto satisfied = CriterionSatisfied(coverage, coop, cfg);
    if (!report.ok() || !satisfied.ok()) {
      notes.Fail(absl::StrCat("instance ", n, ": error"));
      continue;
    }
    const auto expected = oracle::Degree(inst);
    notes.Check(report->degree == ToRational(expected), [&] {
      return absl::StrCat("instance ", n, ": degree ", ToString(report->degree), " vs ",
                          oracle::ToString(expected));
    });
    notes.Check(*satisfied == oracle::Satisfied(inst),
                [&] { return absl::StrCat("instance ", n, ": criterion verdict differs"); });
  }
  return notes.Finish(absl::StrCat(kInstances, " instances, seed ", kSeed));
}

GenerationBudget RandomBudget(const oracle::Instance& inst, std::uint64_t seed) {
  return {.seed = seed, .pool = oracle::ToPool(inst), .mr_pool = oracle::ToMrPool(inst)};
}

Outcome PropertySuite() {
  constexpr int kCases = 1000;
  Notes notes;
  auto degree = [](const oracle::Instance& inst) {
    auto report = MeasureAdequacy(oracle::ToCoverageMap(inst), oracle::ToAssociation(inst),
                                  oracle::ToConfig(inst));
    return report.ok() ? report->degree : Rational(-1);
  };
  std::mt19937_64 rng(41);
  int greedy_traces = 0;
  for (int n = 0; n < kCases; ++n) {
    auto inst = oracle::RandomInstance(rng);
    const Rational d = degree(inst);
    notes.Check(d >= Rational(0) && d <= Rational(1),
                [&] { return absl::StrCat("case ", n, ": degree ", ToString(d), " outside [0,1]"); });
    auto satisfied = CriterionSatisfied(oracle::ToCoverageMap(inst), oracle::ToAssociation(inst),
                                        oracle::ToConfig(inst));
    notes.Check(satisfied.ok() && (d == Rational(1)) == *satisfied,
                [&] { return absl::StrCat("case ", n, ": full degree vs criterion"); });

    auto more = inst;
    more.coop.insert({std::uniform_int_distribution<int>(0, inst.inputs - 1)(rng),
                      std::uniform_int_distribution<int>(0, inst.mrs - 1)(rng)});
    notes.Check(degree(more) >= d,
                [&] { return absl::StrCat("case ", n, ": association lowered the degree"); });

    auto deeper = inst;
    deeper.k = inst.k + 1;
    notes.Check(degree(deeper) <= d,
                [&] { return absl::StrCat("case ", n, ": degree rose with k"); });

    const auto coverage = oracle::ToCoverageMap(inst);
    const auto budget = RandomBudget(inst, n % 3);
    auto max = MaxAchievableDegree(coverage, oracle::ToConfig(inst), budget);
    if (max.ok() && *max > Rational(0)) {
      const AdequacyLevel level{*max * Rational(9, 10), Rational(1)};
      auto a = GenerateSuiteInLevel(coverage, oracle::ToConfig(inst), level, budget);
      auto b = GenerateSuiteInLevel(coverage, oracle::ToConfig(inst), level, budget);
      if (!a.ok() || !b.ok()) {
        notes.Fail(absl::StrCat("case ", n, ": generation failed below the maximum"));
        continue;
      }
      notes.Check(SerializeSuite(a->suite) == SerializeSuite(b->suite),
                  [&] { return absl::StrCat("case ", n, ": generation not deterministic"); });
      if (!a->used_search) {
        ++greedy_traces;
        Rational previous(0);
        for (const auto& step : a->trace) {
          notes.Check(step.degree > previous,
                      [&] { return absl::StrCat("case ", n, ": greedy trace not increasing"); });
          previous = step.degree;
        }
      }
    }
  }
  notes.Check(greedy_traces >= kCases / 2, [&] {
    return absl::StrCat("only ", greedy_traces, " greedy traces checked");
  });
  return notes.Finish(absl::StrCat(kCases, " cases per property, ", greedy_traces,
                                   " greedy traces"));
}

Outcome LexerFaultReproduction() {
  const auto scenario = examples::SeededFault();
  const auto faulty = RunMg(scenario.mg, scenario.mr, std::span(&scenario.source, 1),
                            scenario.faulty);
  const auto fixed = RunMg(scenario.mg, scenario.mr, std::span(&scenario.source, 1),
                           scenario.fixed);
  Notes notes;
  notes.Check(faulty.status == VerdictStatus::kViolated,
              [&] { return absl::StrCat("faulty lexer: ", VerdictStatusName(faulty.status)); });
  notes.Check(fixed.status == VerdictStatus::kSatisfied,
              [&] { return absl::StrCat("fixed lexer: ", VerdictStatusName(fixed.status)); });
  return notes.Finish(absl::StrCat("MG ", scenario.mg.id, ": faulty ",
                                   VerdictStatusName(faulty.status), ", fixed ",
                                   VerdictStatusName(fixed.status)));
}

Outcome DeskScaleTrends() {
  constexpr int kSeeds = 30;
  auto coverage =
      BuildCoverageMap(examples::TrigStudySpec(), CoverageKind::kIoCtf, examples::TrigStudyPool());
  if (!coverage.ok()) return {false, std::string(coverage.status().message())};
  const MutantSet mutants = examples::TrigMutantSet();
  const auto pool = examples::TrigStudyPool();
  const auto mrs = examples::TrigRelations(/*study_extras=*/true);
  Notes notes;

  auto mean_fde = [&](const std::function<absl::StatusOr<GenerationResult>(std::uint64_t)>& make,
                      const std::string& label) {
    Rational sum(0);
    int suites = 0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      auto generated = make(seed);
      if (!generated.ok()) {
        notes.Fail(absl::StrCat(label, " seed ", seed, ": ", generated.status().message()));
        continue;
      }
      auto fde = Fde(generated->suite, mutants);
      if (!fde.ok()) {
        notes.Fail(absl::StrCat(label, " seed ", seed, ": ", fde.status().message()));
        continue;
      }
      sum += fde->fde;
      ++suites;
    }
    return suites == 0 ? Rational(0) : sum / Rational(suites);
  };

  std::vector<Rational> by_level;
  for (int i = 0; i < 5; ++i) {
    const AdequacyLevel level{Rational(i, 5), Rational(i + 1, 5)};
    by_level.push_back(mean_fde(
        [&](std::uint64_t seed) {
          return GenerateSuiteInLevel(*coverage, {.k = 3}, level,
                                      {.seed = seed, .pool = pool, .mr_pool = mrs});
        },
        LevelToString(level)));
  }
  std::vector<Rational> by_k;
  for (int k = 1; k <= 3; ++k) {
    by_k.push_back(mean_fde(
        [&](std::uint64_t seed) {
          return GenerateSatisfyingSuite(*coverage, {.k = k},
                                         {.seed = seed, .pool = pool, .mr_pool = mrs});
        },
        absl::StrCat("k=", k)));
  }
  for (std::size_t i = 1; i < by_level.size(); ++i) {
    notes.Check(by_level[i] >= by_level[i - 1],
                [&] { return absl::StrCat("mean FDE drops at level ", i + 1); });
  }
  for (std::size_t i = 1; i < by_k.size(); ++i) {
    notes.Check(by_k[i] >= by_k[i - 1],
                [&] { return absl::StrCat("mean FDE drops at k=", i + 1); });
  }
  auto decimals = [](const std::vector<Rational>& values) {
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(ToDecimal(v, 3));
    return absl::StrJoin(parts, " ");
  };
  return notes.Finish(absl::StrCat(kSeeds, " seeds; mean FDE by level (k=3): ",
                                   decimals(by_level), "; at full satisfaction by k=1..3: ",
                                   decimals(by_k)));
}

Outcome IntervalGeneration() {
  const auto coverage = examples::WorkedExampleCoverage();
  const auto reachable = oracle::ReachableDegrees(oracle::WorkedExampleInstance(3));
  Notes notes;
  std::vector<std::string> summary;
  for (int i = 0; i < 10; ++i) {
    const AdequacyLevel level{Rational(i, 10), Rational(i + 1, 10)};
    bool feasible = false;
    for (const auto& d : reachable) {
      feasible = feasible || (ToRational(d) > level.lower && ToRational(d) <= level.upper);
    }
    auto result = GenerateSuiteInLevel(
        coverage, {.k = 3}, level,
        {.pool = examples::WorkedExamplePool(), .mr_pool = examples::TrigRelations()});
    if (feasible) {
      if (!result.ok()) {
        notes.Fail(absl::StrCat(LevelToString(level), ": ", result.status().message()));
        continue;
      }
      auto again = MeasureAdequacy(coverage, result->suite.Association(), {.k = 3});
      const bool inside = again.ok() && again->degree > level.lower && again->degree <= level.upper;
      notes.Check(inside, [&] { return absl::StrCat(LevelToString(level), ": re-measured outside"); });
      summary.push_back(absl::StrCat(LevelToString(level), " ",
                                     again.ok() ? ToString(again->degree) : "?"));
    } else {
      const bool infeasible = HasErrorKind(result.status(), ErrorKind::kInfeasible);
      notes.Check(infeasible, [&] {
        return absl::StrCat(LevelToString(level), ": expected Infeasible, got ",
                            result.ok() ? "a suite" : result.status().ToString());
      });
      summary.push_back(absl::StrCat(LevelToString(level), " infeasible"));
    }
  }
  return notes.Finish(absl::StrJoin(summary, ", "));
}

Outcome FormatRoundTrips() {
  Notes notes;
  auto check_suite = [&](const std::string& name, const std::string& text) {
    auto parsed = ParseSuite(text);
    if (!parsed.ok()) {
      notes.Fail(absl::StrCat(name, ": ", parsed.status().message()));
      return;
    }
    const std::string first = SerializeSuite(*parsed);
    auto again = ParseSuite(first);
    notes.Check(again.ok() && SerializeSuite(*again) == first,
                [&] { return absl::StrCat(name, ": suite export differs"); });
  };
  auto check_matrix = [&](const std::string& name, const CoverageMap& map) {
    const std::string first = SerializeCoverageMatrix(map);
    auto parsed = ParseCoverageMatrix(first, map.kind());
    notes.Check(parsed.ok() && SerializeCoverageMatrix(*parsed) == first,
                [&] { return absl::StrCat(name, ": matrix export differs"); });
  };
  check_suite("worked example", SerializeSuite(examples::WorkedExampleSuite()));
  for (const char* path : {"/worked_example/suite.json", "/lexer_fault/suite.json",
                           "/trig_study/pool.json", "/trig_study/suite.json"}) {
    auto text = ReadTextFile(std::string(MTA_PROJECTS_DIR) + path);
    if (!text.ok()) {
      notes.Fail(absl::StrCat(path, ": ", text.status().message()));
      continue;
    }
    check_suite(path, *text);
  }
  check_matrix("worked example", examples::WorkedExampleCoverage());
  auto study = BuildCoverageMap(examples::TrigStudySpec(), CoverageKind::kIoCtf,
                                examples::TrigStudyPool());
  if (study.ok()) check_matrix("study", *study);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    check_matrix(absl::StrCat("random ", n),
                 oracle::ToCoverageMap(oracle::RandomInstance(rng)));
  }
  return notes.Finish("5 suite files, 102 coverage matrices");
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace mta

int main() {
  using mta::Criterion;
  const std::vector<Criterion> criteria = {
      {"worked-example-exactness", 1, mta::WorkedExampleExactness},
      {"oracle-equivalence", 10, mta::OracleEquivalence},
      {"property-suite", 0, mta::PropertySuite},
      {"lexer-fault-reproduction", 0, mta::LexerFaultReproduction},
      {"desk-scale-trends", 120, mta::DeskScaleTrends},
      {"interval-generation", 0, mta::IntervalGeneration},
      {"format-round-trips", 0, mta::FormatRoundTrips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    mta::Outcome outcome = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += absl::StrCat("; took ", seconds, " s, limit ", c.limit_seconds, " s");
    }
    failed += !outcome.pass;
    std::printf("%s %s (%.3f s): %s\n", outcome.pass ? "PASS" : "FAIL", c.name, seconds,
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
