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

#include "mtadequacy/adequacy.hpp"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mtadequacy/error.hpp"

namespace mta {

absl::string_view DistinctnessName(Distinctness mode) {
  return mode == Distinctness::kById ? "by-id" : "by-output-class";
}

absl::StatusOr<Distinctness> ParseDistinctness(absl::string_view name) {
  if (name == "by-id") return Distinctness::kById;
  if (name == "by-output-class") return Distinctness::kByOutputClass;
  return MakeError(ErrorKind::kInvalidDefinition,
                   absl::StrCat("unknown distinctness mode '", name, "'"));
}

std::map<std::string, std::string, std::less<>> OutputClassesOf(
    std::span<const MetamorphicRelation> mrs) {
  std::map<std::string, std::string, std::less<>> out;
  for (const auto& mr : mrs) {
    if (mr.output_class) out[mr.id] = *mr.output_class;
  }
  return out;
}

std::set<std::string> MrsCoveredBy(absl::string_view input_id,
                                   const AssociationRelation& coop,
                                   const AdequacyConfig& cfg) {
  std::set<std::string> out;
  for (auto& mr : coop.MrsOf(input_id)) {
    if (cfg.distinctness == Distinctness::kByOutputClass) {
      if (auto it = cfg.output_classes.find(mr); it != cfg.output_classes.end()) {
        out.insert(it->second);
        continue;
      }
    }
    out.insert(std::move(mr));
  }
  return out;
}

Rational Epsilon(const Rational& n) { return n < 1 ? n : Rational(1); }

Rational Kappa(std::span<const std::string> sat_inputs,
               const AssociationRelation& coop, const AdequacyConfig& cfg) {
  Rational best(0);
  for (const auto& t : sat_inputs) {
    const auto covered = static_cast<std::int64_t>(MrsCoveredBy(t, coop, cfg).size());
    best = std::max(best, Epsilon(Rational(covered, cfg.k)));
  }
  return best;
}

std::string AdequacyReport::DegreeFraction() const {
  return ToFractionString(degree, num_requirements());
}

absl::StatusOr<AdequacyReport> MeasureAdequacy(const CoverageMap& coverage,
                                               const AssociationRelation& coop,
                                               const AdequacyConfig& cfg) {
  if (cfg.k < 1) {
    return MakeError(ErrorKind::kInvalidDefinition, absl::StrCat("k must be >= 1, got ", cfg.k));
  }
  const auto& requirements = coverage.requirements();
  if (requirements.empty()) {
    return MakeError(ErrorKind::kEmptyRequirementSet, "no test requirements to measure");
  }
  // Association count per input, computed once.
  std::vector<int> counts;
  for (const auto& id : coverage.input_ids()) {
    counts.push_back(static_cast<int>(MrsCoveredBy(id, coop, cfg).size()));
  }
  AdequacyReport report;
  report.k = cfg.k;
  report.distinctness = cfg.distinctness;
  report.satisfied = true;
  // Sum of min(count, k) over requirements; the degree is that over k*|E|.
  std::int64_t total = 0;
  for (std::size_t r = 0; r < requirements.size(); ++r) {
    RequirementScore score{requirements[r].id, Rational(0), std::nullopt, 0};
    int best = -1;
    for (std::size_t i = 0; i < coverage.input_ids().size(); ++i) {
      if (!coverage.Sat(i, r)) continue;
      const std::string& id = coverage.input_ids()[i];
      const int clamped = std::min(counts[i], cfg.k);
      if (clamped > best || (clamped == best && id < *score.witness)) {
        best = clamped;
        score.witness = id;
        score.witness_mrs = counts[i];
      }
    }
    if (best < 0) {
      report.infeasible.push_back(requirements[r].id);
      best = 0;
    }
    score.kappa = Rational(best, cfg.k);
    total += best;
    if (best < cfg.k) report.satisfied = false;
    report.per_requirement.push_back(std::move(score));
  }
  report.degree = Rational(total, static_cast<std::int64_t>(cfg.k) *
                                      static_cast<std::int64_t>(requirements.size()));
  return report;
}

absl::StatusOr<bool> CriterionSatisfied(const CoverageMap& coverage,
                                        const AssociationRelation& coop,
                                        const AdequacyConfig& cfg) {
  if (cfg.k < 1) {
    return MakeError(ErrorKind::kInvalidDefinition, absl::StrCat("k must be >= 1, got ", cfg.k));
  }
  if (coverage.requirements().empty()) {
    return MakeError(ErrorKind::kEmptyRequirementSet, "no test requirements to measure");
  }
  for (std::size_t r = 0; r < coverage.requirements().size(); ++r) {
    bool witnessed = false;
    for (std::size_t i = 0; i < coverage.input_ids().size() && !witnessed; ++i) {
      witnessed = coverage.Sat(i, r) &&
                  static_cast<int>(MrsCoveredBy(coverage.input_ids()[i], coop, cfg).size()) >=
                      cfg.k;
    }
    if (!witnessed) return false;
  }
  return true;
}

std::string FormatReportText(const AdequacyReport& report) {
  std::string out = absl::StrCat("k-MR coverage (k=", report.k, ", ",
                                 DistinctnessName(report.distinctness), ")\n");
  absl::StrAppend(&out, "requirements: ", report.num_requirements(),
                  " (infeasible: ", report.infeasible.size(), ")\n");
  absl::StrAppend(&out, "degree: ", report.DegreeFraction(), " (",
                  ToDecimal(report.degree), ")\n");
  absl::StrAppend(&out, "criterion satisfied: ", report.satisfied ? "yes" : "no", "\n");
  for (const auto& score : report.per_requirement) {
    absl::StrAppend(&out, "  ", score.requirement_id, "  K=", ToString(score.kappa),
                    "  witness=", score.witness.value_or("-"), "\n");
  }
  if (!report.infeasible.empty()) {
    absl::StrAppend(&out, "infeasible: ", absl::StrJoin(report.infeasible, " "), "\n");
  }
  return out;
}

std::string FormatReportCsv(const AdequacyReport& report) {
  std::string out = "requirement_id,kappa,witness,witness_mrs\n";
  for (const auto& score : report.per_requirement) {
    absl::StrAppend(&out, score.requirement_id, ",", ToString(score.kappa), ",",
                    score.witness.value_or(""), ",", score.witness_mrs, "\n");
  }
  return out;
}

}  // namespace mta
