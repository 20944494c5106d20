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

#ifndef MTADEQUACY_EXAMPLES_LEXER_HPP_
#define MTADEQUACY_EXAMPLES_LEXER_HPP_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mtadequacy/execution.hpp"
#include "mtadequacy/model.hpp"

namespace mta::examples {

// Minimal lexer over strings, commas, numbers and identifiers. Each token
// prints as "category[,lexeme].\n". A string missing its closing quote is
// an error token. The faulty build does not check that the character that
// ended a string is a quote, so that character leaks into the lexeme.
std::string Lex(absl::string_view text, bool faulty = false);

// Joins the payload fields in order, appends a newline and lexes the result.
absl::StatusOr<std::string> RunLexer(const Payload& payload, bool faulty = false);

// Parser for the records the lexer prints.
OutputParser LexerOutputParser();
SutAdapter LexerAdapter(bool faulty = false);

// Payload {"string": s, "comma": c, "number": n}, all text.
TestInput LexerInput(std::string id, std::string string_field, std::string comma,
                     std::string number);

// Cut the joined input at its second quotation mark; the follow-up's tokens
// must occur inside the source's tokens.
Json SubstringRelationJson();
MetamorphicRelation SubstringRelation();

std::vector<TestInput> LexerPool();

struct SeededFaultScenario {
  TestInput source;
  MetamorphicRelation mr;
  MetamorphicGroup mg;
  SutAdapter faulty;
  SutAdapter fixed;
};
SeededFaultScenario SeededFault();

}  // namespace mta::examples

#endif  // MTADEQUACY_EXAMPLES_LEXER_HPP_
