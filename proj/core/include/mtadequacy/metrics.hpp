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

#ifndef MTADEQUACY_METRICS_HPP_
#define MTADEQUACY_METRICS_HPP_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "mtadequacy/execution.hpp"
#include "mtadequacy/rational.hpp"

namespace mta {

struct Mutant {
  std::string id;
  SutAdapter sut;
};

struct MutantSet {
  SutAdapter original;
  std::vector<Mutant> mutants;
};

// InvalidDefinition on duplicate mutant ids.
absl::Status ValidateMutantSet(const MutantSet& set);

struct DetectionOptions {
  // Count execution errors (crashes, timeouts) as detections.
  bool crash_counts = false;
};

// A mutant is detected when some MG is violated on it.
bool Detects(std::span<const MgVerdict> verdicts, const DetectionOptions& options = {});

// Per-(suite, mutant) outcome summaries, the input to FDR.
class VerdictStore {
 public:
  struct Entry {
    bool violated = false;
    bool errored = false;
  };

  void Record(const std::string& suite_id, const std::string& mutant_id,
              std::span<const MgVerdict> verdicts);
  // False when nothing was recorded for the pair.
  bool Detected(const std::string& suite_id, const std::string& mutant_id,
                const DetectionOptions& options = {}) const;

  std::vector<std::string> SuiteIds() const;
  std::vector<std::string> MutantIds() const;

 private:
  std::map<std::pair<std::string, std::string>, Entry> entries_;
};

struct FdeResult {
  Rational fde;
  // Mutant id -> verdicts, in mutant order.
  std::vector<std::pair<std::string, std::vector<MgVerdict>>> verdicts;
};

// Runs the suite on every mutant. EmptyMutantSet when there are none.
// Results are also recorded in `store` under `suite_id` when given.
absl::StatusOr<FdeResult> Fde(const TestSuite& suite, const MutantSet& mutants,
                              const DetectionOptions& options = {}, int workers = 1,
                              VerdictStore* store = nullptr,
                              const std::string& suite_id = "");

// Fraction of the listed suites that detect the mutant. NoSuites when the
// list is empty.
absl::StatusOr<Rational> Fdr(const std::string& mutant_id,
                             std::span<const std::string> suite_ids,
                             const VerdictStore& store,
                             const DetectionOptions& options = {});

}  // namespace mta

#endif  // MTADEQUACY_METRICS_HPP_
