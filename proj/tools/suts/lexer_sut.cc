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

// Usage: mta-lexer-sut [--faulty] < text
// Lexes standard input and prints one "category[,lexeme]." record per token.

#include <iostream>
#include <iterator>
#include <string>

#include "mtadequacy/examples/lexer.hpp"

int main(int argc, char** argv) {
  const bool faulty = argc > 1 && std::string(argv[1]) == "--faulty";
  const std::string text((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
  std::cout << mta::examples::Lex(text, faulty);
  return 0;
}
