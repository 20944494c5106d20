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

#include "mtadequacy/subprocess.hpp"

#include <chrono>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace mta {
namespace {

using ::mta::testing::HasErrorKind;
using ::testing::HasSubstr;

TEST(RunProcessTest, CapturesBothStreamsAndExitCode) {
  MTA_ASSERT_OK_AND_ASSIGN(
      auto result, RunProcess({.argv = {"sh", "-c", "echo out; echo err >&2; exit 3"}}));
  EXPECT_EQ(result.stdout_text, "out\n");
  EXPECT_EQ(result.stderr_text, "err\n");
  EXPECT_EQ(result.exit_code, 3);
  EXPECT_FALSE(result.timed_out);
}

TEST(RunProcessTest, FeedsStdin) {
  MTA_ASSERT_OK_AND_ASSIGN(auto result, RunProcess({.argv = {"tr", "a-z", "A-Z"},
                                                    .stdin_text = "hello\n"}));
  EXPECT_EQ(result.stdout_text, "HELLO\n");
  EXPECT_EQ(result.exit_code, 0);
}

TEST(RunProcessTest, LargeOutputDoesNotDeadlock) {
  const std::string input(1 << 20, 'x');
  MTA_ASSERT_OK_AND_ASSIGN(auto result, RunProcess({.argv = {"cat"}, .stdin_text = input}));
  EXPECT_EQ(result.stdout_text.size(), input.size());
}

TEST(RunProcessTest, TimeoutKillsTheProcessGroup) {
  const auto start = std::chrono::steady_clock::now();
  MTA_ASSERT_OK_AND_ASSIGN(
      auto result, RunProcess({.argv = {"sh", "-c", "sleep 30 & sleep 30"},
                               .timeout = std::chrono::milliseconds(200)}));
  EXPECT_TRUE(result.timed_out);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(RunProcessTest, MissingProgramIsALaunchFailure) {
  auto result = RunProcess({.argv = {"/nonexistent/mta-no-such-program"}});
  EXPECT_THAT(result, HasErrorKind(ErrorKind::kLaunchFailure));
  EXPECT_THAT(std::string(result.status().message()), HasSubstr("mta-no-such-program"));
  EXPECT_THAT(RunProcess({.argv = {}}), HasErrorKind(ErrorKind::kLaunchFailure));
}

}  // namespace
}  // namespace mta
