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

#include <set>

#include "absl/strings/str_cat.h"
#include "mtadequacy/error.hpp"

namespace mta {

absl::Status ValidateMutantSet(const MutantSet& set) {
  std::set<std::string> ids;
  for (const auto& m : set.mutants) {
    if (!ids.insert(m.id).second) {
      return MakeError(ErrorKind::kInvalidDefinition,
                       absl::StrCat("duplicate mutant id ", m.id));
    }
  }
  return absl::OkStatus();
}

bool Detects(std::span<const MgVerdict> verdicts, const DetectionOptions& options) {
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::kViolated) return true;
    if (options.crash_counts && v.status == VerdictStatus::kExecutionError) return true;
  }
  return false;
}

void VerdictStore::Record(const std::string& suite_id, const std::string& mutant_id,
                          std::span<const MgVerdict> verdicts) {
  Entry& e = entries_[{suite_id, mutant_id}];
  for (const auto& v : verdicts) {
    e.violated = e.violated || v.status == VerdictStatus::kViolated;
    e.errored = e.errored || v.status == VerdictStatus::kExecutionError;
  }
}

bool VerdictStore::Detected(const std::string& suite_id, const std::string& mutant_id,
                            const DetectionOptions& options) const {
  auto it = entries_.find({suite_id, mutant_id});
  if (it == entries_.end()) return false;
  return it->second.violated || (options.crash_counts && it->second.errored);
}

std::vector<std::string> VerdictStore::SuiteIds() const {
  std::set<std::string> ids;
  for (const auto& [key, entry] : entries_) ids.insert(key.first);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> VerdictStore::MutantIds() const {
  std::set<std::string> ids;
  for (const auto& [key, entry] : entries_) ids.insert(key.second);
  return {ids.begin(), ids.end()};
}

absl::StatusOr<FdeResult> Fde(const TestSuite& suite, const MutantSet& mutants,
                              const DetectionOptions& options, int workers,
                              VerdictStore* store, const std::string& suite_id) {
  if (mutants.mutants.empty()) {
    return MakeError(ErrorKind::kEmptyMutantSet, "no mutants to evaluate against");
  }
  if (auto status = ValidateMutantSet(mutants); !status.ok()) return status;
  FdeResult result;
  std::int64_t detected = 0;
  for (const auto& mutant : mutants.mutants) {
    std::vector<MgVerdict> verdicts = RunSuite(suite, mutant.sut, workers);
    if (Detects(verdicts, options)) ++detected;
    if (store) store->Record(suite_id, mutant.id, verdicts);
    result.verdicts.emplace_back(mutant.id, std::move(verdicts));
  }
  result.fde = Rational(detected, static_cast<std::int64_t>(mutants.mutants.size()));
  return result;
}

absl::StatusOr<Rational> Fdr(const std::string& mutant_id,
                             std::span<const std::string> suite_ids,
                             const VerdictStore& store, const DetectionOptions& options) {
  if (suite_ids.empty()) {
    return MakeError(ErrorKind::kNoSuites, "FDR needs at least one suite");
  }
  std::int64_t q = 0;
  for (const auto& s : suite_ids) {
    if (store.Detected(s, mutant_id, options)) ++q;
  }
  return Rational(q, static_cast<std::int64_t>(suite_ids.size()));
}

}  // namespace mta
