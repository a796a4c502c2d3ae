// Copyright 2026 The whyfail Authors.
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace whyfail::lang {

/// Malformed MiniLang source (or value literal) at a given position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

enum class TokenKind { Ident, Int, Float, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::uint64_t int_value = 0;
  double float_value = 0.0;
  int line = 1;
  int column = 1;
};

/// Splits source text into tokens. `//` and `#` start line comments.
std::vector<Token> tokenize(std::string_view source);

}  // namespace whyfail::lang
