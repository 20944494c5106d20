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

#include "mtadequacy/coverage.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mtadequacy/examples/trig.hpp"
#include "test_util.hpp"

namespace mta {
namespace {

using ::mta::testing::HasErrorKind;
using ::mta::testing::IsOk;
using ::testing::ElementsAre;
using ::testing::IsEmpty;
using ::testing::SizeIs;

constexpr char kSmallSpec[] = R"json({
  "i_categories": [
    {"name": "sign", "choices": [
      {"name": "neg", "when": {"field": "x", "op": "<", "value": 0}},
      {"name": "nonneg", "when": {"field": "x", "op": ">=", "value": 0}}]},
    {"name": "size", "choices": [
      {"name": "small", "when": {"field": "y", "interval": [0, 10], "closed": "[)"}},
      {"name": "large", "when": {"field": "y", "op": ">=", "value": 10}}]}
  ],
  "o_categories": [
    {"name": "result", "choices": [
      {"name": "zero", "when": {"field": "x", "op": "=", "value": 0}},
      {"name": "other", "when": {"field": "x", "op": "!=", "value": 0}}]}
  ],
  "frames": [
    {"id": "f1", "i": {"sign": "neg", "size": "small"}, "o": {"result": "other"}},
    {"id": "f2", "i": {"sign": "nonneg", "size": "small"}, "o": {"result": "zero"}},
    {"id": "f3", "i": {"sign": "nonneg", "size": "large"}, "o": {"result": "other"}},
    {"id": "f4", "i": {"sign": "neg", "size": "small"}, "o": {"result": "zero"}}
  ]
})json";

CategoryChoiceSpec SmallSpec() {
  auto spec = CategoryChoiceSpec::FromJson(Json::parse(kSmallSpec));
  EXPECT_THAT(spec, IsOk());
  return *spec;
}

TestInput Xy(std::string id, std::int64_t x, std::int64_t y) {
  return TestInput{std::move(id), Payload{{"x", x}, {"y", y}}};
}

std::vector<std::string> Ids(const std::vector<TestRequirement>& reqs) {
  std::vector<std::string> out;
  for (const auto& r : reqs) out.push_back(r.id);
  return out;
}

TEST(CoverageKindTest, NamesRoundTrip) {
  for (auto kind : {CoverageKind::kIChoice, CoverageKind::kIChoicePair, CoverageKind::kIoCtf,
                    CoverageKind::kStatement, CoverageKind::kBranch}) {
    MTA_ASSERT_OK_AND_ASSIGN(auto back, ParseCoverageKind(CoverageKindName(kind)));
    EXPECT_EQ(back, kind);
  }
  EXPECT_THAT(ParseCoverageKind("mcdc"), HasErrorKind(ErrorKind::kUnsupportedCriterion));
}

TEST(EnumerateRequirementsTest, AllBlackBoxCriteria) {
  const auto spec = SmallSpec();
  MTA_ASSERT_OK_AND_ASSIGN(auto choices, EnumerateRequirements(spec, CoverageKind::kIChoice));
  EXPECT_THAT(Ids(choices), ElementsAre("sign.neg", "sign.nonneg", "size.small", "size.large"));
  // Pairs come from the frames, deduplicated.
  MTA_ASSERT_OK_AND_ASSIGN(auto pairs, EnumerateRequirements(spec, CoverageKind::kIChoicePair));
  EXPECT_THAT(Ids(pairs), ElementsAre("sign.neg__size.small", "sign.nonneg__size.small",
                                      "sign.nonneg__size.large"));
  EXPECT_THAT(pairs[0].descriptor, ElementsAre("sign.neg", "size.small"));
  MTA_ASSERT_OK_AND_ASSIGN(auto frames, EnumerateRequirements(spec, CoverageKind::kIoCtf));
  EXPECT_THAT(Ids(frames), ElementsAre("f1", "f2", "f3", "f4"));
  EXPECT_THAT(EnumerateRequirements(spec, CoverageKind::kStatement),
              HasErrorKind(ErrorKind::kUnsupportedCriterion));
}

TEST(BuildCoverageMapTest, SmallSpecRows) {
  const auto spec = SmallSpec();
  const std::vector<TestInput> inputs{Xy("a", -3, 2), Xy("b", 0, 5), Xy("c", 4, 40)};
  MTA_ASSERT_OK_AND_ASSIGN(auto ctf, BuildCoverageMap(spec, CoverageKind::kIoCtf, inputs));
  EXPECT_EQ(SerializeCoverageMatrix(ctf),
            "input_id,f1,f2,f3,f4\n"
            "a,1,0,0,0\n"
            "b,0,1,0,0\n"
            "c,0,0,1,0\n");
  EXPECT_THAT(ctf.InfeasibleRequirements(), ElementsAre("f4"));

  MTA_ASSERT_OK_AND_ASSIGN(auto ic, BuildCoverageMap(spec, CoverageKind::kIChoice, inputs));
  EXPECT_TRUE(ic.Sat("a", "sign.neg"));
  EXPECT_FALSE(ic.Sat("a", "sign.nonneg"));
  EXPECT_TRUE(ic.Sat("c", "size.large"));
  EXPECT_FALSE(ic.Sat("zz", "size.large"));
  EXPECT_THAT(ic.SatisfyingInputs(2), ElementsAre("a", "b"));
  EXPECT_THAT(ic.InfeasibleRequirements(), IsEmpty());

  MTA_ASSERT_OK_AND_ASSIGN(auto pairs,
                           BuildCoverageMap(spec, CoverageKind::kIChoicePair, inputs));
  EXPECT_TRUE(pairs.Sat("b", "sign.nonneg__size.small"));
  EXPECT_FALSE(pairs.Sat("c", "sign.nonneg__size.small"));
}

TEST(BuildCoverageMapTest, InputInNoChoiceCoversNothingInThatCategory) {
  const std::vector<TestInput> inputs{Xy("a", 1, -5)};
  MTA_ASSERT_OK_AND_ASSIGN(auto ic,
                           BuildCoverageMap(SmallSpec(), CoverageKind::kIChoice, inputs));
  EXPECT_TRUE(ic.Sat("a", "sign.nonneg"));
  EXPECT_FALSE(ic.Sat("a", "size.small"));
  EXPECT_FALSE(ic.Sat("a", "size.large"));
}

TEST(BuildCoverageMapTest, AmbiguousAndMissing) {
  const Json overlapping = Json::parse(R"({"i_categories": [{"name": "c", "choices": [
      {"name": "a", "when": {"field": "x", "op": ">", "value": 0}},
      {"name": "b", "when": {"field": "x", "op": ">", "value": 5}}]}]})");
  MTA_ASSERT_OK_AND_ASSIGN(auto spec, CategoryChoiceSpec::FromJson(overlapping));
  const std::vector<TestInput> ambiguous{Xy("a", 9, 0)};
  EXPECT_THAT(BuildCoverageMap(spec, CoverageKind::kIChoice, ambiguous),
              HasErrorKind(ErrorKind::kAmbiguousChoice));
  const std::vector<TestInput> fine{Xy("a", 2, 0)};
  EXPECT_THAT(BuildCoverageMap(spec, CoverageKind::kIChoice, fine), IsOk());
  const std::vector<TestInput> missing{TestInput{"m", Payload{{"y", std::int64_t{1}}}}};
  EXPECT_THAT(BuildCoverageMap(spec, CoverageKind::kIChoice, missing),
              HasErrorKind(ErrorKind::kMissingField));
}

TEST(CategoryChoiceSpecTest, RejectsBadDefinitions) {
  for (const char* text : {
           R"([])",
           R"({"i_categories": [{"name": "c"}]})",
           R"({"i_categories": [{"name": "c", "choices": []}, {"name": "c", "choices": []}]})",
           R"({"i_categories": [{"name": "c", "choices": [{"name": "a"}, {"name": "a"}]}]})",
           R"({"frames": [{"id": "f", "i": {"nope": "a"}}]})",
           R"({"i_categories": [{"name": "c", "choices": [{"name": "a"}]}],
               "frames": [{"id": "f", "i": {"c": "b"}}]})",
           R"({"frames": [{"id": "f"}, {"id": "f"}]})",
       }) {
    EXPECT_THAT(CategoryChoiceSpec::FromJson(Json::parse(text)),
                HasErrorKind(ErrorKind::kInvalidDefinition))
        << text;
  }
}

TEST(CategoryChoiceSpecTest, JsonRoundTrip) {
  const auto spec = examples::TrigStudySpec();
  MTA_ASSERT_OK_AND_ASSIGN(auto back, CategoryChoiceSpec::FromJson(spec.ToJson()));
  EXPECT_EQ(back.ToJson().dump(), spec.ToJson().dump());
}

// Frame an angle falls into, computed arithmetically rather than through the
// declarative predicates.
std::string ExpectedFrame(std::int64_t x, const std::string& flag) {
  const std::string range = x < 0 ? "negative" : x < 360 ? "base" : "beyond";
  const std::int64_t r = ((x % 360) + 360) % 360;
  const int q = static_cast<int>(r / 90) + 1;
  return absl::StrCat(flag, "-", range, "-q", q);
}

TEST(BuildCoverageMapTest, StudyFramesMatchArithmeticClassification) {
  const auto pool = examples::TrigStudyPool();
  MTA_ASSERT_OK_AND_ASSIGN(
      auto map, BuildCoverageMap(examples::TrigStudySpec(), CoverageKind::kIoCtf, pool));
  ASSERT_THAT(map.requirements(), SizeIs(24));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto x = std::get<std::int64_t>(*pool[i].payload.Find("x"));
    const auto flag = std::get<Tag>(*pool[i].payload.Find("flag")).name;
    const std::string expected = ExpectedFrame(x, flag);
    for (std::size_t r = 0; r < map.requirements().size(); ++r) {
      // Angles on a quadrant boundary have a zero output and match no sign.
      const bool boundary = ((x % 90) + 90) % 90 == 0;
      const bool want = !boundary && map.requirements()[r].id == expected;
      EXPECT_EQ(map.Sat(i, r), want) << pool[i].id << " " << map.requirements()[r].id;
    }
  }
}

TEST(CoverageMatrixTest, RoundTripsByteIdentical) {
  const auto map = examples::WorkedExampleCoverage();
  const std::string text = SerializeCoverageMatrix(map);
  MTA_ASSERT_OK_AND_ASSIGN(auto parsed, ParseCoverageMatrix(text));
  EXPECT_EQ(parsed, map);
  EXPECT_EQ(SerializeCoverageMatrix(parsed), text);
}

TEST(CoverageMatrixTest, AcceptsCrlfAndMissingFinalNewline) {
  MTA_ASSERT_OK_AND_ASSIGN(auto map, ParseCoverageMatrix("input_id,r1\r\nt1,1\r\nt2,0"));
  EXPECT_THAT(map.input_ids(), ElementsAre("t1", "t2"));
  EXPECT_TRUE(map.Sat("t1", "r1"));
}

TEST(CoverageMatrixTest, Errors) {
  EXPECT_THAT(ParseCoverageMatrix(""), HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseCoverageMatrix("id,r1\n"), HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseCoverageMatrix("input_id,r1\nt1,1,0\n"), HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseCoverageMatrix("input_id,r1\nt1,2\n"), HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseCoverageMatrix("input_id,r1,r1\nt1,1,1\n"),
              HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseCoverageMatrix("input_id,r1\nt1,1\nt1,0\n"),
              HasErrorKind(ErrorKind::kParseError));
  const std::vector<std::string> known{"t1"};
  EXPECT_THAT(ParseCoverageMatrix("input_id,r1\nt9,1\n", CoverageKind::kStatement, known),
              HasErrorKind(ErrorKind::kUnknownInputId));
}

TEST(CoverageMapTest, RestrictAndDrop) {
  const auto map = examples::WorkedExampleCoverage();
  const std::vector<std::string> keep{"t4", "t1"};
  MTA_ASSERT_OK_AND_ASSIGN(auto restricted, map.RestrictInputs(keep));
  EXPECT_THAT(restricted.input_ids(), ElementsAre("t4", "t1"));
  EXPECT_TRUE(restricted.Sat(0, 5));
  const std::vector<std::string> unknown{"t9"};
  EXPECT_THAT(map.RestrictInputs(unknown), HasErrorKind(ErrorKind::kUnknownInputId));

  const std::vector<std::string> drop{"s8"};
  const auto trimmed = map.WithoutRequirements(drop);
  EXPECT_THAT(trimmed.requirements(), SizeIs(7));
  EXPECT_THAT(trimmed.InfeasibleRequirements(), IsEmpty());
  EXPECT_THAT(map.InfeasibleRequirements(), ElementsAre("s8"));
}

TEST(CoverageMapTest, CreateValidatesShape) {
  EXPECT_THAT(CoverageMap::Create(CoverageKind::kStatement, {{"r", CoverageKind::kStatement, {}}},
                                  {"a"}, {{true, false}}),
              HasErrorKind(ErrorKind::kInvalidDefinition));
  EXPECT_THAT(CoverageMap::Create(CoverageKind::kStatement, {}, {"a"}, {}),
              HasErrorKind(ErrorKind::kInvalidDefinition));
}

}  // namespace
}  // namespace mta
