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

#include "mtadequacy/examples/lexer.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "absl/strings/str_cat.h"

namespace mta::examples {
namespace {

constexpr absl::string_view kSubstringRelation = R"json(
  {"id": "MR_substring", "arity": [1, 1], "output_class": "substring",
   "eligibility": {"field": "string", "matches": "\"[^\"]*\".*"},
   "transform": {"followups": [{"from": 0, "ops": [
     {"op": "truncate_at", "fields": ["string", "comma", "number"],
      "token": "\"", "occurrence": 2}]}]},
   "relation": {"kind": "substring"}}
)json";

void Emit(std::string& out, absl::string_view category, absl::string_view lexeme) {
  absl::StrAppend(&out, category);
  if (!lexeme.empty()) absl::StrAppend(&out, ",", lexeme);
  out += ".\n";
}

}  // namespace

std::string Lex(absl::string_view text, bool faulty) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
    } else if (ch == ',') {
      Emit(out, "comma", "");
      ++i;
    } else if (ch == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j < text.size() && text[j] == '"') {
        Emit(out, "string", text.substr(i, j + 1 - i));
        i = j + 1;
      } else if (faulty && j < text.size()) {
        // The terminal character is taken into the lexeme unchecked.
        Emit(out, "error", text.substr(i, j + 1 - i));
        i = j + 1;
      } else {
        Emit(out, "error", text.substr(i, j - i));
        i = j;
      }
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      Emit(out, "numeric", text.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      Emit(out, "identifier", text.substr(i, j - i));
      i = j;
    } else {
      Emit(out, "error", text.substr(i, 1));
      ++i;
    }
  }
  return out;
}

absl::StatusOr<std::string> RunLexer(const Payload& payload, bool faulty) {
  std::string text;
  for (const auto& [name, value] : payload.fields()) text += FieldText(value);
  text += "\n";
  return Lex(text, faulty);
}

OutputParser LexerOutputParser() {
  auto parser = OutputParser::FromJson(
      Json{{"parser", "records"}, {"terminator", ".\n"}, {"separator", ","}});
  return *parser;
}

SutAdapter LexerAdapter(bool faulty) {
  SutAdapter sut;
  sut.id = faulty ? "lexer:faulty" : "lexer";
  sut.mode = SutAdapter::Mode::kCallback;
  sut.callback = [faulty](const Payload& p) { return RunLexer(p, faulty); };
  sut.parser = LexerOutputParser();
  return sut;
}

TestInput LexerInput(std::string id, std::string string_field, std::string comma,
                     std::string number) {
  return TestInput{std::move(id), Payload{{"string", std::move(string_field)},
                                          {"comma", std::move(comma)},
                                          {"number", std::move(number)}}};
}

Json SubstringRelationJson() {
  return Json::parse(kSubstringRelation.begin(), kSubstringRelation.end());
}

MetamorphicRelation SubstringRelation() {
  auto mr = RelationFromJson(SubstringRelationJson());
  if (!mr.ok()) {
    std::fprintf(stderr, "bundled lexer MR is broken: %s\n",
                 std::string(mr.status().message()).c_str());
    std::abort();
  }
  return *std::move(mr);
}

std::vector<TestInput> LexerPool() {
  return {
      LexerInput("abcd", "\"abcd\"", ",", "123"),
      LexerInput("empty", "\"\"", ",", "0"),
      LexerInput("spaced", "\"hello world\"", ",", "42"),
      LexerInput("inner_comma", "\"a,b\"", ",", "9"),
      LexerInput("digits", "\"2024\"", ",", "7"),
  };
}

SeededFaultScenario SeededFault() {
  TestInput source = LexerInput("abcd", "\"abcd\"", ",", "123");
  MetamorphicRelation mr = SubstringRelation();
  auto mg = BuildMg(mr, std::span(&source, 1), "abcd.MR_substring");
  return SeededFaultScenario{std::move(source), std::move(mr), *std::move(mg),
                             LexerAdapter(/*faulty=*/true), LexerAdapter(/*faulty=*/false)};
}

}  // namespace mta::examples
