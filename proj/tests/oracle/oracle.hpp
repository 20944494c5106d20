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

#ifndef MTADEQUACY_TESTS_ORACLE_ORACLE_HPP_
#define MTADEQUACY_TESTS_ORACLE_ORACLE_HPP_

// Reference evaluator for the k-MR adequacy degree, written directly from
// the definitions over plain index-based structures. It shares no code with
// the library beyond the conversion helpers at the bottom.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mtadequacy/adequacy.hpp"
#include "mtadequacy/coverage.hpp"
#include "mtadequacy/model.hpp"

namespace mta::oracle {

// Exact fraction kept unreduced until compared.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

std::string ToString(const Fraction& f);

struct Instance {
  int inputs = 0;
  int requirements = 0;
  int mrs = 0;
  // sat[i][r]: input i satisfies requirement r.
  std::vector<std::vector<bool>> sat;
  // (input, mr) pairs.
  std::set<std::pair<int, int>> coop;
  // Output class per MR; -1 means the MR is its own class.
  std::vector<int> mr_class;
  // eligible[i][m]: MR m accepts input i (generation only).
  std::vector<std::vector<bool>> eligible;
  int k = 1;
  bool by_class = false;
};

// Number of distinct MRs (or classes) associated with input i.
int CoveredCount(const Instance& inst, int input);
// Per-requirement kappa.
std::vector<Fraction> Kappas(const Instance& inst);
// Sum of kappas over the number of requirements.
Fraction Degree(const Instance& inst);
// Every requirement has a satisfying input associated with at least k MRs.
bool Satisfied(const Instance& inst);

// Every degree reachable with some subset of the eligible pairs. Exponential;
// meant for instances with at most ~18 eligible pairs.
std::vector<Fraction> ReachableDegrees(Instance inst);
Fraction MaxReachableDegree(Instance inst);

// The worked example written out as index data: inputs t1..t4, requirements
// s1..s8, MRs MR1..MR5. Sine inputs t1, t2 accept MR1 and MR2; t3 (cosine,
// 100) accepts MR1, MR3, MR4, MR5; t4 (cosine, 24) accepts MR1, MR4, MR5.
Instance WorkedExampleInstance(int k);

struct RandomShape {
  int max_inputs = 6;
  int max_requirements = 6;
  int max_mrs = 5;
  int max_k = 4;
  double sat_density = 0.35;
  double coop_density = 0.4;
  double eligible_density = 0.6;
  bool allow_classes = true;
};
Instance RandomInstance(std::mt19937_64& rng, const RandomShape& shape = {});

// Conversions to library types. Inputs are named "i<n>", requirements
// "r<n>", MRs "m<n>" and classes "c<n>", all zero-padded to sort by index.
std::string InputName(int i);
std::string RequirementName(int r);
std::string MrName(int m);
CoverageMap ToCoverageMap(const Instance& inst);
AssociationRelation ToAssociation(const Instance& inst);
AdequacyConfig ToConfig(const Instance& inst);
// Pool inputs with an "n" field and single-source MRs whose eligibility
// lists the accepted inputs by number.
std::vector<TestInput> ToPool(const Instance& inst);
std::vector<MetamorphicRelation> ToMrPool(const Instance& inst);
// Reads an association back into index pairs.
std::set<std::pair<int, int>> FromAssociation(const AssociationRelation& coop);

}  // namespace mta::oracle

#endif  // MTADEQUACY_TESTS_ORACLE_ORACLE_HPP_
