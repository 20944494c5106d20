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

#include "mtadequacy/examples/builtin.hpp"

#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"
#include "mtadequacy/error.hpp"
#include "mtadequacy/examples/lexer.hpp"
#include "mtadequacy/examples/trig.hpp"

namespace mta::examples {

absl::StatusOr<SutCallback> ResolveBuiltin(absl::string_view name) {
  if (name == "lexer") return LexerAdapter(false).callback;
  if (name == "lexer:faulty") return LexerAdapter(true).callback;
  if (name == "trig") return TrigAdapter().callback;
  if (absl::ConsumePrefix(&name, "trig:")) {
    auto variant = ParseTrigVariant(name);
    if (!variant.ok()) return variant.status();
    return TrigAdapter(*variant).callback;
  }
  return MakeError(ErrorKind::kInvalidDefinition,
                   absl::StrCat("unknown builtin SUT '", name, "'"));
}

}  // namespace mta::examples
