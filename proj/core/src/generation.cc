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

#include "mtadequacy/generation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "mtadequacy/error.hpp"

namespace mta {
namespace {

// Pool inputs that have a coverage row, with their eligible MRs.
struct Problem {
  AdequacyConfig cfg;
  std::int64_t denominator = 1;  // k * |E|
  std::vector<const TestInput*> inputs;
  std::vector<std::vector<int>> reqs_of;
  std::vector<std::vector<int>> sat_of;
  std::vector<std::vector<const MetamorphicRelation*>> eligible;
  std::vector<std::vector<std::string>> units;
  std::vector<int> cap;
  // Candidate (input, eligible index) pairs in tie-breaking order.
  std::vector<std::pair<int, int>> order;
};

std::string UnitOf(const AdequacyConfig& cfg, const MetamorphicRelation& mr) {
  if (cfg.distinctness == Distinctness::kByOutputClass) {
    if (auto it = cfg.output_classes.find(mr.id); it != cfg.output_classes.end()) {
      return it->second;
    }
  }
  return mr.id;
}

absl::StatusOr<Problem> BuildProblem(const CoverageMap& coverage, const AdequacyConfig& cfg,
                                     const GenerationBudget& budget) {
  if (cfg.k < 1) {
    return MakeError(ErrorKind::kInvalidDefinition, absl::StrCat("k must be >= 1, got ", cfg.k));
  }
  if (coverage.requirements().empty()) {
    return MakeError(ErrorKind::kEmptyRequirementSet, "no test requirements");
  }
  if (budget.max_iterations <= 0) {
    return MakeError(ErrorKind::kInvalidDefinition, "max_iterations must be positive");
  }
  Problem p;
  p.cfg = cfg;
  for (const auto& [id, cls] : OutputClassesOf(budget.mr_pool)) {
    p.cfg.output_classes.emplace(id, cls);
  }
  p.denominator = static_cast<std::int64_t>(cfg.k) *
                  static_cast<std::int64_t>(coverage.requirements().size());
  p.sat_of.resize(coverage.requirements().size());
  std::map<absl::string_view, std::size_t> rows;
  for (std::size_t i = 0; i < coverage.input_ids().size(); ++i) {
    rows[coverage.input_ids()[i]] = i;
  }
  for (const auto& input : budget.pool) {
    auto row = rows.find(input.id);
    if (row == rows.end()) continue;
    const int t = static_cast<int>(p.inputs.size());
    p.inputs.push_back(&input);
    p.reqs_of.emplace_back();
    for (std::size_t r = 0; r < coverage.requirements().size(); ++r) {
      if (coverage.Sat(row->second, r)) {
        p.reqs_of[t].push_back(static_cast<int>(r));
        p.sat_of[r].push_back(t);
      }
    }
    p.eligible.emplace_back();
    p.units.emplace_back();
    std::set<std::string> distinct;
    for (const auto& mr : budget.mr_pool) {
      if (mr.arity.num_source != 1) continue;
      auto ok = IsEligible(mr, std::span(&input, 1));
      if (!ok.ok()) return ok.status();
      if (!*ok) continue;
      p.eligible[t].push_back(&mr);
      p.units[t].push_back(UnitOf(p.cfg, mr));
      distinct.insert(p.units[t].back());
    }
    p.cap.push_back(static_cast<int>(distinct.size()));
  }
  for (int t = 0; t < static_cast<int>(p.inputs.size()); ++t) {
    for (int j = 0; j < static_cast<int>(p.eligible[t].size()); ++j) p.order.emplace_back(t, j);
  }
  std::sort(p.order.begin(), p.order.end(), [&](const auto& a, const auto& b) {
    return std::tie(p.inputs[a.first]->id, p.eligible[a.first][a.second]->id) <
           std::tie(p.inputs[b.first]->id, p.eligible[b.first][b.second]->id);
  });
  if (budget.seed != 0) {
    std::mt19937_64 rng(budget.seed);
    for (std::size_t i = p.order.size(); i > 1; --i) {
      std::swap(p.order[i - 1], p.order[rng() % i]);
    }
  }
  return p;
}

// Numerator of the degree for per-input counts `c` (clamped at k).
std::int64_t Numerator(const Problem& p, const std::vector<int>& c) {
  std::int64_t n = 0;
  for (const auto& sat : p.sat_of) {
    int best = 0;
    for (int t : sat) best = std::max(best, std::min(c[t], p.cfg.k));
    n += best;
  }
  return n;
}

// Incremental greedy state.
struct State {
  explicit State(const Problem& p)
      : counts(p.inputs.size(), 0), units(p.inputs.size()), best(p.sat_of.size(), 0) {}

  std::vector<int> counts;
  std::vector<std::set<std::string>> units;
  std::vector<int> best;
  std::int64_t numerator = 0;
  std::vector<std::pair<int, int>> chosen;
};

std::int64_t Gain(const Problem& p, const State& s, int t, int j) {
  if (s.units[t].contains(p.units[t][j])) return 0;
  const int next = std::min(s.counts[t] + 1, p.cfg.k);
  std::int64_t gain = 0;
  for (int r : p.reqs_of[t]) gain += std::max(0, next - s.best[r]);
  return gain;
}

void Apply(const Problem& p, State& s, int t, int j) {
  if (s.units[t].insert(p.units[t][j]).second) {
    ++s.counts[t];
    const int value = std::min(s.counts[t], p.cfg.k);
    for (int r : p.reqs_of[t]) {
      if (value > s.best[r]) {
        s.numerator += value - s.best[r];
        s.best[r] = value;
      }
    }
  }
  s.chosen.emplace_back(t, j);
}

absl::StatusOr<GenerationResult> Realize(const CoverageMap& coverage, const Problem& p,
                                         const GenerationBudget& budget,
                                         const std::vector<std::pair<int, int>>& chosen,
                                         bool used_search) {
  std::vector<MetamorphicGroup> mgs;
  std::vector<GenerationStep> trace;
  std::set<std::string> input_ids, mr_ids;
  State replay(p);
  for (const auto& [t, j] : chosen) {
    const TestInput& input = *p.inputs[t];
    const MetamorphicRelation& mr = *p.eligible[t][j];
    auto mg = BuildMg(mr, std::span(&input, 1), absl::StrCat(input.id, ".", mr.id),
                      DeriveOptions{budget.seed, {}});
    if (!mg.ok()) return mg.status();
    mgs.push_back(*std::move(mg));
    input_ids.insert(input.id);
    mr_ids.insert(mr.id);
    Apply(p, replay, t, j);
    trace.push_back({input.id, mr.id, Rational(replay.numerator, p.denominator)});
  }
  std::vector<TestInput> inputs;
  for (const auto& input : budget.pool) {
    if (input_ids.contains(input.id)) inputs.push_back(input);
  }
  std::vector<MetamorphicRelation> mrs;
  for (const auto& mr : budget.mr_pool) {
    if (mr_ids.contains(mr.id)) mrs.push_back(mr);
  }
  auto suite = TestSuite::Create(std::move(inputs), std::move(mrs), std::move(mgs));
  if (!suite.ok()) return suite.status();
  const AssociationRelation coop = suite->Association();
  auto report = MeasureAdequacy(coverage, coop, p.cfg);
  if (!report.ok()) return report.status();
  return GenerationResult{*std::move(suite), *std::move(report), std::move(trace),
                          used_search};
}

// First eligible MRs of input t, in tie order, that give `count` distinct units.
std::vector<std::pair<int, int>> PickUnits(const Problem& p, int t, int count) {
  std::vector<std::pair<int, int>> out;
  std::set<std::string> seen;
  for (const auto& [ti, j] : p.order) {
    if (ti != t || static_cast<int>(out.size()) >= count) continue;
    if (seen.insert(p.units[t][j]).second) out.emplace_back(t, j);
  }
  return out;
}

bool InLevel(std::int64_t numerator, std::int64_t denominator, const AdequacyLevel& level) {
  const Rational d(numerator, denominator);
  return d > level.lower && d <= level.upper;
}

enum class SearchOutcome { kFound, kExhausted, kOutOfBudget };

// Depth-first search over per-input counts c_t in [0, min(cap_t, k)].
class CountSearch {
 public:
  CountSearch(const Problem& p, const AdequacyLevel& level, std::int64_t budget)
      : p_(p), level_(level), budget_(budget), c_(p.inputs.size(), 0) {
    for (int t = 0; t < static_cast<int>(p.inputs.size()); ++t) {
      if (!p.reqs_of[t].empty() && p.cap[t] > 0) vars_.push_back(t);
    }
    // Inputs that satisfy many requirements first; they move the bounds most.
    std::stable_sort(vars_.begin(), vars_.end(), [&](int a, int b) {
      return p.reqs_of[a].size() > p.reqs_of[b].size();
    });
  }

  SearchOutcome Run() {
    const SearchOutcome out = Visit(0);
    return out;
  }
  const std::vector<int>& counts() const { return c_; }

 private:
  SearchOutcome Visit(std::size_t depth) {
    if (++nodes_ > budget_) return SearchOutcome::kOutOfBudget;
    const std::int64_t low = Numerator(p_, c_);
    for (std::size_t i = depth; i < vars_.size(); ++i) c_[vars_[i]] = Max(vars_[i]);
    const std::int64_t high = Numerator(p_, c_);
    for (std::size_t i = depth; i < vars_.size(); ++i) c_[vars_[i]] = 0;
    if (Rational(high, p_.denominator) <= level_.lower ||
        Rational(low, p_.denominator) > level_.upper) {
      return SearchOutcome::kExhausted;
    }
    if (depth == vars_.size()) {
      return InLevel(low, p_.denominator, level_) ? SearchOutcome::kFound
                                                  : SearchOutcome::kExhausted;
    }
    const int t = vars_[depth];
    for (int v = 0; v <= Max(t); ++v) {
      c_[t] = v;
      const SearchOutcome out = Visit(depth + 1);
      if (out != SearchOutcome::kExhausted) return out;
    }
    c_[t] = 0;
    return SearchOutcome::kExhausted;
  }

  int Max(int t) const { return std::min(p_.cap[t], p_.cfg.k); }

  const Problem& p_;
  const AdequacyLevel& level_;
  const std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<int> vars_;
  std::vector<int> c_;
};

}  // namespace

absl::Status ValidateLevel(const AdequacyLevel& level) {
  if (level.lower < Rational(0) || level.lower >= level.upper || level.upper > Rational(1)) {
    return MakeError(ErrorKind::kInvalidDefinition,
                     absl::StrCat("adequacy level must satisfy 0 <= lower < upper <= 1, got ",
                                  LevelToString(level)));
  }
  return absl::OkStatus();
}

absl::StatusOr<AdequacyLevel> ParseLevel(absl::string_view text) {
  std::vector<absl::string_view> parts = absl::StrSplit(text, ',');
  if (parts.size() != 2) {
    return MakeError(ErrorKind::kParseError,
                     absl::StrCat("level must be 'lower,upper', got '", text, "'"));
  }
  auto lo = ParseRational(parts[0]);
  if (!lo.ok()) return lo.status();
  auto hi = ParseRational(parts[1]);
  if (!hi.ok()) return hi.status();
  AdequacyLevel level{*lo, *hi};
  if (auto status = ValidateLevel(level); !status.ok()) return status;
  return level;
}

std::string LevelToString(const AdequacyLevel& level) {
  return absl::StrCat("(", ToString(level.lower), ", ", ToString(level.upper), "]");
}

absl::StatusOr<Rational> MaxAchievableDegree(const CoverageMap& coverage,
                                             const AdequacyConfig& cfg,
                                             const GenerationBudget& budget) {
  auto p = BuildProblem(coverage, cfg, budget);
  if (!p.ok()) return p.status();
  return Rational(Numerator(*p, p->cap), p->denominator);
}

absl::StatusOr<GenerationResult> GenerateSatisfyingSuite(const CoverageMap& coverage,
                                                         const AdequacyConfig& cfg,
                                                         const GenerationBudget& budget) {
  auto problem = BuildProblem(coverage, cfg, budget);
  if (!problem.ok()) return problem.status();
  const Problem& p = *problem;
  const int k = p.cfg.k;

  std::vector<std::string> blocking;
  std::set<int> uncovered;
  for (std::size_t r = 0; r < p.sat_of.size(); ++r) {
    if (p.sat_of[r].empty()) continue;  // infeasible, not a target
    const bool reachable = std::any_of(p.sat_of[r].begin(), p.sat_of[r].end(),
                                       [&](int t) { return p.cap[t] >= k; });
    if (!reachable) blocking.push_back(coverage.requirements()[r].id);
    uncovered.insert(static_cast<int>(r));
  }
  if (!blocking.empty()) {
    return MakeError(ErrorKind::kUnachievable,
                     absl::StrCat("no pool input reaches ", k,
                                  " distinct MRs for requirement(s): ",
                                  absl::StrJoin(blocking, ", ")));
  }
  // Input rank in tie order: position of its first candidate.
  std::vector<std::size_t> rank(p.inputs.size(), p.order.size());
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    rank[p.order[i].first] = std::min(rank[p.order[i].first], i);
  }
  std::vector<std::pair<int, int>> chosen;
  std::set<int> used;
  std::int64_t steps = 0;
  while (!uncovered.empty()) {
    if (++steps > budget.max_iterations) {
      return MakeError(ErrorKind::kUnachievable, "iteration budget exhausted");
    }
    int best = -1;
    std::size_t best_gain = 0;
    for (int t = 0; t < static_cast<int>(p.inputs.size()); ++t) {
      if (used.contains(t) || p.cap[t] < k) continue;
      std::size_t gain = 0;
      for (int r : p.reqs_of[t]) gain += uncovered.contains(r);
      if (gain > best_gain || (gain == best_gain && gain > 0 && rank[t] < rank[best])) {
        best = t;
        best_gain = gain;
      }
    }
    if (best < 0) break;  // unreachable given the check above
    used.insert(best);
    for (int r : p.reqs_of[best]) uncovered.erase(r);
    for (const auto& pick : PickUnits(p, best, k)) chosen.push_back(pick);
  }
  return Realize(coverage, p, budget, chosen, /*used_search=*/false);
}

absl::StatusOr<GenerationResult> GenerateSuiteInLevel(const CoverageMap& coverage,
                                                      const AdequacyConfig& cfg,
                                                      const AdequacyLevel& level,
                                                      const GenerationBudget& budget) {
  if (auto status = ValidateLevel(level); !status.ok()) return status;
  auto problem = BuildProblem(coverage, cfg, budget);
  if (!problem.ok()) return problem.status();
  const Problem& p = *problem;

  const Rational max_degree(Numerator(p, p.cap), p.denominator);
  if (max_degree <= level.lower) {
    return MakeError(ErrorKind::kInfeasible,
                     absl::StrCat("the pool reaches at most ", ToString(max_degree),
                                  ", not above ", ToString(level.lower)));
  }

  State state(p);
  std::int64_t steps = 0;
  while (Rational(state.numerator, p.denominator) <= level.lower) {
    if (++steps > budget.max_iterations) break;
    std::optional<std::pair<int, int>> pick;
    std::int64_t pick_gain = 0;
    for (const auto& [t, j] : p.order) {
      const std::int64_t gain = Gain(p, state, t, j);
      if (gain <= 0 || Rational(state.numerator + gain, p.denominator) > level.upper) {
        continue;
      }
      if (gain > pick_gain) {
        pick = {t, j};
        pick_gain = gain;
      }
    }
    if (!pick) break;
    Apply(p, state, pick->first, pick->second);
  }
  if (InLevel(state.numerator, p.denominator, level)) {
    return Realize(coverage, p, budget, state.chosen, /*used_search=*/false);
  }

  // Greedy stalled: every productive step overshoots the upper bound.
  CountSearch search(p, level, budget.max_iterations);
  switch (search.Run()) {
    case SearchOutcome::kFound:
      break;
    case SearchOutcome::kExhausted:
      return MakeError(ErrorKind::kInfeasible,
                       absl::StrCat("no combination of associations lands in ",
                                    LevelToString(level),
                                    "; every achievable degree steps over it"));
    case SearchOutcome::kOutOfBudget:
      return MakeError(ErrorKind::kOvershoot,
                       absl::StrCat("every greedy step from ",
                                    ToString(Rational(state.numerator, p.denominator)),
                                    " jumps past ", ToString(level.upper),
                                    " and the search budget ran out"));
  }
  std::vector<std::pair<int, int>> chosen;
  for (int t = 0; t < static_cast<int>(p.inputs.size()); ++t) {
    for (const auto& pick : PickUnits(p, t, search.counts()[t])) chosen.push_back(pick);
  }
  return Realize(coverage, p, budget, chosen, /*used_search=*/true);
}

}  // namespace mta
