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

#include "mtadequacy/examples/trig.hpp"

#include <cmath>
#include <numbers>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "mtadequacy/error.hpp"

namespace mta::examples {
namespace {

constexpr std::pair<TrigVariant, absl::string_view> kVariantNames[] = {
    {TrigVariant::kCorrect, "correct"},
    {TrigVariant::kSignFlip, "sign_flip"},
    {TrigVariant::kPeriodError, "period_error"},
    {TrigVariant::kFlagSwap, "flag_swap"},
    {TrigVariant::kClampRemoval, "clamp_removal"},
    {TrigVariant::kConstantOutput, "constant_output"},
};

constexpr absl::string_view kRelations = R"json([
  {"id": "MR1", "arity": [1, 1], "output_class": "equal",
   "eligibility": true,
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "affine", "field": "x", "scale": 1, "offset": 360}]}]},
   "relation": {"kind": "equal", "tolerance": 1e-9}},
  {"id": "MR2", "arity": [1, 1], "output_class": "negated_equal",
   "eligibility": {"field": "flag", "op": "=", "value": "sine"},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "affine", "field": "x", "scale": -1, "offset": 0}]}]},
   "relation": {"kind": "negated_equal", "tolerance": 1e-9}},
  {"id": "MR3", "arity": [1, 1], "output_class": "le",
   "eligibility": {"all": [
     {"field": "flag", "op": "=", "value": "cosine"},
     {"field": "x", "interval": [90, 270], "closed": "[]", "mod": 360}]},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "pick", "field": "x", "period": 360, "window": [0, 180], "step": 1},
     {"op": "set", "field": "flag", "value": {"tag": "sine"}}]}]},
   "relation": {"kind": "le", "tolerance": 1e-9}},
  {"id": "MR4", "arity": [1, 1], "output_class": "ge",
   "eligibility": {"all": [
     {"field": "flag", "op": "=", "value": "cosine"},
     {"field": "x", "interval": [0, 180], "closed": "[]", "mod": 360}]},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "pick", "field": "x", "period": 360, "window": [0, 180],
      "from_source": true, "step": 1}]}]},
   "relation": {"kind": "ge", "tolerance": 1e-9, "min": -1, "max": 1}},
  {"id": "MR5", "arity": [1, 1], "output_class": "sum_of_squares",
   "eligibility": {"field": "flag", "op": "=", "value": "cosine"},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "set", "field": "flag", "value": {"tag": "sine"}}]}]},
   "relation": {"kind": "sum_of_squares", "constant": 1, "tolerance": 1e-9}}
])json";

// Symmetries used only by the study pool.
constexpr absl::string_view kStudyRelations = R"json([
  {"id": "MR6", "arity": [1, 1], "output_class": "equal",
   "eligibility": {"field": "flag", "op": "=", "value": "sine"},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "affine", "field": "x", "scale": -1, "offset": 180}]}]},
   "relation": {"kind": "equal", "tolerance": 1e-9}},
  {"id": "MR7", "arity": [1, 1], "output_class": "equal",
   "eligibility": {"field": "flag", "op": "=", "value": "cosine"},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "affine", "field": "x", "scale": -1, "offset": 0}]}]},
   "relation": {"kind": "equal", "tolerance": 1e-9}}
])json";

// Output sign choices describe the expected result from the input alone.
constexpr absl::string_view kStudyCategories = R"json({
  "i_categories": [
    {"name": "flag", "choices": [
      {"name": "sine", "when": {"field": "flag", "op": "=", "value": "sine"}},
      {"name": "cosine", "when": {"field": "flag", "op": "=", "value": "cosine"}}]},
    {"name": "range", "choices": [
      {"name": "negative", "when": {"field": "x", "op": "<", "value": 0}},
      {"name": "base", "when": {"field": "x", "interval": [0, 360], "closed": "[)"}},
      {"name": "beyond", "when": {"field": "x", "op": ">=", "value": 360}}]},
    {"name": "quadrant", "choices": [
      {"name": "q1", "when": {"field": "x", "interval": [0, 90], "closed": "[)", "mod": 360}},
      {"name": "q2", "when": {"field": "x", "interval": [90, 180], "closed": "[)", "mod": 360}},
      {"name": "q3", "when": {"field": "x", "interval": [180, 270], "closed": "[)", "mod": 360}},
      {"name": "q4", "when": {"field": "x", "interval": [270, 360], "closed": "[)", "mod": 360}}]}
  ],
  "o_categories": [
    {"name": "sign", "choices": [
      {"name": "positive", "when": {"any": [
        {"all": [{"field": "flag", "op": "=", "value": "sine"},
                 {"field": "x", "interval": [0, 180], "closed": "()", "mod": 360}]},
        {"all": [{"field": "flag", "op": "=", "value": "cosine"},
                 {"any": [{"field": "x", "interval": [0, 90], "closed": "[)", "mod": 360},
                          {"field": "x", "interval": [270, 360], "closed": "()", "mod": 360}]}]}]}},
      {"name": "negative", "when": {"any": [
        {"all": [{"field": "flag", "op": "=", "value": "sine"},
                 {"field": "x", "interval": [180, 360], "closed": "()", "mod": 360}]},
        {"all": [{"field": "flag", "op": "=", "value": "cosine"},
                 {"field": "x", "interval": [90, 270], "closed": "()", "mod": 360}]}]}}]}
  ]
})json";

template <typename T>
T OrDie(absl::StatusOr<T> value) {
  if (!value.ok()) {
    std::fprintf(stderr, "bundled example is broken: %s\n",
                 std::string(value.status().message()).c_str());
    std::abort();
  }
  return *std::move(value);
}

}  // namespace

absl::string_view TrigVariantName(TrigVariant variant) {
  for (const auto& [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "unknown";
}

absl::StatusOr<TrigVariant> ParseTrigVariant(absl::string_view name) {
  for (const auto& [v, n] : kVariantNames) {
    if (n == name) return v;
  }
  return MakeError(ErrorKind::kInvalidDefinition,
                   absl::StrCat("unknown trig variant '", name, "'"));
}

const std::vector<TrigVariant>& TrigMutantVariants() {
  static const auto* const kMutants = new std::vector<TrigVariant>{
      TrigVariant::kSignFlip, TrigVariant::kPeriodError, TrigVariant::kFlagSwap,
      TrigVariant::kClampRemoval, TrigVariant::kConstantOutput};
  return *kMutants;
}

double TrigCompute(double degrees, bool sine, TrigVariant variant) {
  if (variant == TrigVariant::kConstantOutput) return 0;
  if (variant == TrigVariant::kFlagSwap) sine = !sine;
  const double period = variant == TrigVariant::kPeriodError ? 350 : 360;
  double a = std::fmod(degrees, period);
  if (a < 0 && variant != TrigVariant::kClampRemoval) a += period;
  if (!sine) {
    a += 90;
    if (a >= 360) a -= 360;
  }
  // Reduce to a reference angle in [0, 90] and restore the sign.
  const int quadrant = static_cast<int>(a / 90);
  double ref;
  switch (quadrant) {
    case 0:
      ref = a;
      break;
    case 1:
      ref = 180 - a;
      break;
    case 2:
      ref = a - 180;
      break;
    default:
      ref = 360 - a;
      break;
  }
  double result = std::sin(ref * std::numbers::pi / 180);
  if (quadrant >= 2) result = -result;
  if (variant == TrigVariant::kSignFlip && sine) result = -result;
  return result;
}

absl::StatusOr<std::string> RunTrig(const Payload& payload, TrigVariant variant) {
  auto x = payload.Get("x");
  if (!x.ok()) return x.status();
  auto flag = payload.Get("flag");
  if (!flag.ok()) return flag.status();
  auto degrees = AsNumber(*x);
  auto name = AsText(*flag);
  if (!degrees || !name || (*name != "sine" && *name != "cosine")) {
    return absl::InvalidArgumentError("expected numeric x and flag sine|cosine");
  }
  return absl::StrFormat("%.17g\n", TrigCompute(*degrees, *name == "sine", variant));
}

SutAdapter TrigAdapter(TrigVariant variant) {
  SutAdapter sut;
  sut.id = variant == TrigVariant::kCorrect
               ? std::string("trig")
               : absl::StrCat("trig:", TrigVariantName(variant));
  sut.mode = SutAdapter::Mode::kCallback;
  sut.callback = [variant](const Payload& p) { return RunTrig(p, variant); };
  return sut;
}

MutantSet TrigMutantSet() {
  MutantSet set;
  set.original = TrigAdapter();
  for (TrigVariant v : TrigMutantVariants()) {
    set.mutants.push_back({std::string(TrigVariantName(v)), TrigAdapter(v)});
  }
  return set;
}

TestInput TrigInput(std::string id, std::int64_t degrees, absl::string_view flag) {
  return TestInput{std::move(id), Payload{{"x", degrees}, {"flag", Tag{std::string(flag)}}}};
}

Json TrigRelationsJson(bool study_extras) {
  Json list = Json::parse(kRelations.begin(), kRelations.end());
  if (study_extras) {
    for (Json& item : Json::parse(kStudyRelations.begin(), kStudyRelations.end())) {
      list.push_back(std::move(item));
    }
  }
  return list;
}

std::vector<MetamorphicRelation> TrigRelations(bool study_extras) {
  std::vector<MetamorphicRelation> mrs;
  for (const Json& item : TrigRelationsJson(study_extras)) {
    mrs.push_back(OrDie(RelationFromJson(item)));
  }
  return mrs;
}

std::vector<TestInput> WorkedExamplePool() {
  return {TrigInput("t1", 36, "sine"), TrigInput("t2", 74, "sine"),
          TrigInput("t3", 100, "cosine"), TrigInput("t4", 24, "cosine")};
}

CoverageMap WorkedExampleCoverage() {
  std::vector<TestRequirement> requirements;
  for (int s = 1; s <= 8; ++s) {
    const std::string id = absl::StrCat("s", s);
    requirements.push_back({id, CoverageKind::kStatement, {id}});
  }
  return OrDie(CoverageMap::Create(
      CoverageKind::kStatement, std::move(requirements), {"t1", "t2", "t3", "t4"},
      {
          // s1 s2 s3 s4 s5 s6 s7 s8
          {1, 1, 0, 0, 1, 0, 0, 0},
          {1, 0, 0, 1, 0, 0, 1, 0},
          {0, 1, 1, 0, 1, 0, 0, 0},
          {0, 0, 1, 0, 1, 1, 1, 0},
      }));
}

std::vector<MetamorphicGroup> WorkedExampleMgs() {
  const std::vector<TestInput> pool = WorkedExamplePool();
  const std::vector<MetamorphicRelation> mrs = TrigRelations();
  auto mg = [&](int input, int mr, std::vector<double> picks) {
    const TestInput& source = pool[input - 1];
    return OrDie(BuildMg(mrs[mr - 1], std::span(&source, 1),
                         absl::StrCat(source.id, ".", mrs[mr - 1].id),
                         DeriveOptions{0, std::move(picks)}));
  };
  return {mg(1, 1, {}),    mg(2, 2, {}),    mg(3, 3, {74}),
          mg(3, 4, {124}), mg(4, 4, {100}), mg(4, 5, {})};
}

TestSuite WorkedExampleSuite() {
  return OrDie(TestSuite::Create(WorkedExamplePool(), TrigRelations(), WorkedExampleMgs()));
}

GoldenWorkedExample GoldenWorkedExampleData() {
  AssociationRelation coop;
  for (const auto& [t, mr] : std::vector<std::pair<std::string, std::string>>{
           {"t1", "MR1"}, {"t2", "MR2"}, {"t3", "MR3"},
           {"t3", "MR4"}, {"t4", "MR4"}, {"t4", "MR5"}}) {
    coop.Insert(t, mr);
  }
  const Rational third(1, 3), two_thirds(2, 3);
  return GoldenWorkedExample{
      WorkedExampleCoverage(),
      std::move(coop),
      3,
      Rational(11, 24),
      {third, two_thirds, two_thirds, third, two_thirds, two_thirds, third, Rational(0)},
  };
}

std::vector<TestInput> TrigStudyPool() {
  std::vector<TestInput> pool;
  const std::pair<absl::string_view, absl::string_view> flags[] = {{"s", "sine"},
                                                                  {"c", "cosine"}};
  const std::pair<absl::string_view, int> ranges[] = {{"n", -360}, {"b", 0}, {"f", 360}};
  for (const auto& [flag_code, flag] : flags) {
    for (const auto& [range_code, offset] : ranges) {
      for (int q = 0; q < 4; ++q) {
        const int angle = 30 + 90 * q + (flag == "sine" ? 0 : 15);
        pool.push_back(TrigInput(absl::StrCat(flag_code, q + 1, range_code),
                                 angle + offset, flag));
      }
    }
    for (int q = 0; q < 4; ++q) {
      pool.push_back(TrigInput(absl::StrCat(flag_code, q + 1, "b2"), 70 + 90 * q, flag));
    }
  }
  return pool;
}

CategoryChoiceSpec TrigStudySpec() {
  Json spec = Json::parse(kStudyCategories.begin(), kStudyCategories.end());
  Json frames = Json::array();
  for (const std::string flag : {"sine", "cosine"}) {
    for (const std::string range : {"negative", "base", "beyond"}) {
      for (int q = 1; q <= 4; ++q) {
        const bool positive = flag == "sine" ? q <= 2 : (q == 1 || q == 4);
        Json frame = Json::object();
        frame["id"] = absl::StrCat(flag, "-", range, "-q", q);
        frame["i"] = Json::object();
        frame["i"]["flag"] = flag;
        frame["i"]["range"] = range;
        frame["i"]["quadrant"] = absl::StrCat("q", q);
        frame["o"] = Json::object();
        frame["o"]["sign"] = positive ? "positive" : "negative";
        frames.push_back(std::move(frame));
      }
    }
  }
  spec["frames"] = std::move(frames);
  return OrDie(CategoryChoiceSpec::FromJson(spec));
}

}  // namespace mta::examples
