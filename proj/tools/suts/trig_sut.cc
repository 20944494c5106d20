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

// Usage: mta-trig-sut [--variant=<name>] <degrees> <sine|cosine>
// Prints the result on one line. A stand-alone build of the bundled trig
// example, for projects that drive it as an external command.

#include <cstdio>
#include <string>

#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "mtadequacy/examples/trig.hpp"

int main(int argc, char** argv) {
  using mta::examples::TrigVariant;
  TrigVariant variant = TrigVariant::kCorrect;
  int arg = 1;
  if (arg < argc && absl::StartsWith(argv[arg], "--variant=")) {
    auto parsed = mta::examples::ParseTrigVariant(std::string(argv[arg]).substr(10));
    if (!parsed.ok()) {
      std::fprintf(stderr, "unknown variant: %s\n", argv[arg]);
      return 2;
    }
    variant = *parsed;
    ++arg;
  }
  double degrees = 0;
  if (argc - arg != 2 || !absl::SimpleAtod(argv[arg], &degrees)) {
    std::fprintf(stderr, "usage: mta-trig-sut [--variant=NAME] DEGREES sine|cosine\n");
    return 2;
  }
  const std::string flag = argv[arg + 1];
  if (flag != "sine" && flag != "cosine") {
    std::fprintf(stderr, "flag must be sine or cosine\n");
    return 2;
  }
  std::printf("%.17g\n", mta::examples::TrigCompute(degrees, flag == "sine", variant));
  return 0;
}
