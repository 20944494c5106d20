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

#include "mtadequacy/execution.hpp"

#include <atomic>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mtadequacy/examples/builtin.hpp"
#include "mtadequacy/examples/lexer.hpp"
#include "mtadequacy/examples/trig.hpp"
#include "test_util.hpp"

namespace mta {
namespace {

using ::mta::testing::HasErrorKind;
using ::mta::testing::IsOk;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

OutputParser Parser(const char* json) {
  auto parser = OutputParser::FromJson(Json::parse(json));
  EXPECT_THAT(parser, IsOk());
  return *parser;
}

TEST(OutputParserTest, Lines) {
  const auto parser = Parser(R"({"parser": "lines"})");
  EXPECT_THAT(*parser.Parse("a b\r\n\nc\n"), ElementsAre("a b", "c"));
  EXPECT_THAT(*parser.Parse(""), ElementsAre());
}

TEST(OutputParserTest, Whitespace) {
  const auto parser = Parser(R"({"parser": "whitespace"})");
  EXPECT_THAT(*parser.Parse(" 1\t2\n 3 "), ElementsAre("1", "2", "3"));
}

TEST(OutputParserTest, Records) {
  const auto parser = examples::LexerOutputParser();
  EXPECT_THAT(*parser.Parse("string,\"ab\".\ncomma.\nnumber,12.\n"),
              ElementsAre("\"ab\"", "", "12"));
  EXPECT_THAT(parser.Parse("string,\"ab\".\ncomma"), HasErrorKind(ErrorKind::kParseError));
  MTA_ASSERT_OK_AND_ASSIGN(auto back, OutputParser::FromJson(parser.ToJson()));
  EXPECT_EQ(back.ToJson(), parser.ToJson());
  EXPECT_THAT(OutputParser::FromJson(Json::parse(R"({"parser": "xml"})")),
              HasErrorKind(ErrorKind::kInvalidDefinition));
}

TEST(SutAdapterTest, FromJson) {
  MTA_ASSERT_OK_AND_ASSIGN(
      auto builtin, SutAdapterFromJson(Json::parse(R"({"id": "t", "builtin": "trig:sign_flip"})"),
                                       examples::ResolveBuiltin));
  EXPECT_EQ(builtin.mode, SutAdapter::Mode::kCallback);
  MTA_ASSERT_OK_AND_ASSIGN(auto out, ExecuteInput(builtin, examples::TrigInput("a", 90, "sine").payload));
  EXPECT_THAT(out.values, ElementsAre("-1"));

  MTA_ASSERT_OK_AND_ASSIGN(
      auto command,
      SutAdapterFromJson(Json::parse(R"({"id": "c", "command": ["cat"],
          "input_style": "stdin-lines", "timeout_ms": 900, "output": {"parser": "whitespace"}})")));
  EXPECT_EQ(command.argv, std::vector<std::string>{"cat"});
  EXPECT_EQ(command.input_style, InputStyle::kStdinLines);
  EXPECT_EQ(command.timeout.count(), 900);

  for (const char* bad : {R"({"builtin": "trig"})", R"({"id": "x"})",
                          R"({"id": "x", "command": []})",
                          R"({"id": "x", "command": ["cat"], "input_style": "pipe"})",
                          R"({"id": "x", "command": ["cat"], "timeout_ms": 0})"}) {
    EXPECT_THAT(SutAdapterFromJson(Json::parse(bad)), HasErrorKind(ErrorKind::kInvalidDefinition))
        << bad;
  }
  EXPECT_THAT(SutAdapterFromJson(Json::parse(R"({"id": "x", "builtin": "nope"})"),
                                 examples::ResolveBuiltin),
              HasErrorKind(ErrorKind::kInvalidDefinition));
}

TEST(ExecuteInputTest, InputStyles) {
  const Payload payload{{"a", std::string("x")}, {"b", std::int64_t{2}}};
  SutAdapter sut{.id = "echo", .mode = SutAdapter::Mode::kCommand, .argv = {"echo"}};
  EXPECT_EQ(ExecuteInput(sut, payload)->raw, "x 2\n");
  sut.argv = {"cat"};
  sut.input_style = InputStyle::kStdinLines;
  EXPECT_EQ(ExecuteInput(sut, payload)->raw, "x\n2\n");
  sut.input_style = InputStyle::kStdinConcat;
  EXPECT_EQ(ExecuteInput(sut, payload)->raw, "x2\n");
}

TEST(ExecuteInputTest, FailuresAreReported) {
  SutAdapter sut{.id = "f", .mode = SutAdapter::Mode::kCommand, .argv = {"sh", "-c", "exit 7"}};
  auto failed = ExecuteInput(sut, Payload{});
  ASSERT_FALSE(failed.ok());
  EXPECT_THAT(std::string(failed.status().message()), HasSubstr("exit code 7"));
  sut.argv = {"/nonexistent/sut"};
  EXPECT_THAT(ExecuteInput(sut, Payload{}), HasErrorKind(ErrorKind::kLaunchFailure));
  sut.argv = {"sleep", "10"};
  sut.timeout = std::chrono::milliseconds(100);
  EXPECT_EQ(ExecuteInput(sut, Payload{}).status().code(), absl::StatusCode::kDeadlineExceeded);
}

TEST(RunMgTest, VerdictsForCorrectAndFaultyTrig) {
  const TestSuite suite = examples::WorkedExampleSuite();
  for (const auto& mg : suite.mgs()) {
    const auto verdict =
        RunMg(mg, *suite.FindRelation(mg.mr_id), suite.SourcesOf(mg), examples::TrigAdapter());
    EXPECT_EQ(verdict.status, VerdictStatus::kSatisfied) << mg.id << " " << verdict.detail;
    EXPECT_EQ(verdict.source_outputs.size(), 1u);
    EXPECT_EQ(verdict.followup_outputs.size(), 1u);
  }
  // Only MR3 compares a cosine output with a sine output, so only it sees
  // the negated sine.
  const auto verdicts = RunSuite(suite, examples::TrigAdapter(examples::TrigVariant::kSignFlip));
  std::vector<std::string> violated;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::kViolated) violated.push_back(v.mg_id);
  }
  EXPECT_THAT(violated, ElementsAre("t3.MR3"));
}

TEST(RunMgTest, ExecutionErrorsAreRecorded) {
  const TestSuite suite = examples::WorkedExampleSuite();
  SutAdapter broken{.id = "broken", .mode = SutAdapter::Mode::kCommand,
                    .argv = {"/nonexistent/sut"}};
  const auto& mg = suite.mgs()[0];
  const auto verdict = RunMg(mg, *suite.FindRelation(mg.mr_id), suite.SourcesOf(mg), broken);
  EXPECT_EQ(verdict.status, VerdictStatus::kExecutionError);
  EXPECT_TRUE(verdict.launch_failure);
  SutAdapter failing{.id = "failing",
                     .callback = [](const Payload&) -> absl::StatusOr<std::string> {
                       return absl::InternalError("boom");
                     }};
  const auto error = RunMg(mg, *suite.FindRelation(mg.mr_id), suite.SourcesOf(mg), failing);
  EXPECT_EQ(error.status, VerdictStatus::kExecutionError);
  EXPECT_FALSE(error.launch_failure);
  EXPECT_THAT(error.detail, HasSubstr("boom"));
}

TEST(RunSuiteTest, WorkersGiveTheSameVerdicts) {
  const TestSuite suite = examples::WorkedExampleSuite();
  const auto sut = examples::TrigAdapter(examples::TrigVariant::kFlagSwap);
  const auto serial = RunSuite(suite, sut, 1);
  EXPECT_EQ(RunSuite(suite, sut, 4), serial);
  ASSERT_EQ(serial.size(), suite.mgs().size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial[i].mg_id, suite.mgs()[i].id);
}

TEST(RunSuiteTest, UnsafeCallbacksRunOneAtATime) {
  std::atomic<int> active{0}, peak{0};
  SutAdapter sut = examples::TrigAdapter();
  sut.concurrent_safe = false;
  sut.callback = [&](const Payload& p) {
    peak = std::max(peak.load(), ++active);
    auto out = examples::RunTrig(p);
    --active;
    return out;
  };
  RunSuite(examples::WorkedExampleSuite(), sut, 8);
  EXPECT_EQ(peak.load(), 1);
}

TEST(VerdictLogTest, RoundTrip) {
  const auto verdicts = RunSuite(examples::WorkedExampleSuite(),
                                 examples::TrigAdapter(examples::TrigVariant::kPeriodError));
  std::string log;
  for (const auto& v : verdicts) log += VerdictToJsonLine(v);
  MTA_ASSERT_OK_AND_ASSIGN(auto parsed, ParseVerdictLog(log));
  EXPECT_EQ(parsed, verdicts);
  MgVerdict launch{.mg_id = "m", .status = VerdictStatus::kExecutionError, .launch_failure = true};
  MTA_ASSERT_OK_AND_ASSIGN(auto one, ParseVerdictLog(VerdictToJsonLine(launch)));
  EXPECT_EQ(one, std::vector<MgVerdict>{launch});
  EXPECT_THAT(ParseVerdictLog("{\"mg\": \"a\"}\n"), HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseVerdictLog("{\"mg\": \"a\", \"status\": \"maybe\"}\n"),
              HasErrorKind(ErrorKind::kParseError));
  EXPECT_THAT(ParseVerdictLog("nope\n"), HasErrorKind(ErrorKind::kParseError));
}

#ifdef MTA_TRIG_SUT
TEST(CommandSutTest, TrigBinaryAgreesWithBuiltin) {
  SutAdapter command{.id = "trig-cmd", .mode = SutAdapter::Mode::kCommand,
                     .argv = {MTA_TRIG_SUT}};
  const TestSuite suite = examples::WorkedExampleSuite();
  const auto by_command = RunSuite(suite, command, 2);
  const auto by_callback = RunSuite(suite, examples::TrigAdapter());
  ASSERT_EQ(by_command.size(), by_callback.size());
  for (std::size_t i = 0; i < by_command.size(); ++i) {
    EXPECT_EQ(by_command[i].status, VerdictStatus::kSatisfied) << by_command[i].detail;
    EXPECT_EQ(by_command[i].source_outputs, by_callback[i].source_outputs);
  }
  command.argv = {MTA_TRIG_SUT, "--variant=sign_flip"};
  EXPECT_EQ(ExecuteInput(command, examples::TrigInput("a", 30, "sine").payload)->values,
            ExecuteInput(examples::TrigAdapter(examples::TrigVariant::kSignFlip),
                         examples::TrigInput("a", 30, "sine").payload)
                ->values);
}
#endif

#ifdef MTA_LEXER_SUT
TEST(CommandSutTest, LexerBinaryReproducesTheSeededFault) {
  const auto scenario = examples::SeededFault();
  SutAdapter faulty{.id = "lexer-cmd", .mode = SutAdapter::Mode::kCommand,
                    .argv = {MTA_LEXER_SUT, "--faulty"},
                    .input_style = InputStyle::kStdinConcat,
                    .parser = examples::LexerOutputParser()};
  const auto bad = RunMg(scenario.mg, scenario.mr, std::span(&scenario.source, 1), faulty);
  EXPECT_EQ(bad.status, VerdictStatus::kViolated) << bad.detail;
  SutAdapter fixed = faulty;
  fixed.argv = {MTA_LEXER_SUT};
  const auto good = RunMg(scenario.mg, scenario.mr, std::span(&scenario.source, 1), fixed);
  EXPECT_EQ(good.status, VerdictStatus::kSatisfied) << good.detail;
  EXPECT_EQ(good.source_outputs,
            RunMg(scenario.mg, scenario.mr, std::span(&scenario.source, 1), scenario.fixed)
                .source_outputs);
}
#endif

}  // namespace
}  // namespace mta
