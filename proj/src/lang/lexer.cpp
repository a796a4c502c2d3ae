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

#include "whyfail/lang/lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace whyfail::lang {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = col;

    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      tok.kind = TokenKind::Ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }

    if (digit(c) || (c == '.' && i + 1 < src.size() && digit(src[i + 1]))) {
      std::size_t j = i;
      bool is_float = false;
      while (j < src.size() && digit(src[j])) ++j;
      if (j < src.size() && src[j] == '.' && j + 1 < src.size() && digit(src[j + 1])) {
        is_float = true;
        ++j;
        while (j < src.size() && digit(src[j])) ++j;
      } else if (j < src.size() && src[j] == '.' && !(j + 1 < src.size() && ident_start(src[j + 1]))) {
        // "1." is a float literal
        is_float = true;
        ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && digit(src[k])) {
          is_float = true;
          j = k;
          while (j < src.size() && digit(src[j])) ++j;
        }
      }
      tok.text = std::string(src.substr(i, j - i));
      if (is_float) {
        tok.kind = TokenKind::Float;
        tok.float_value = std::strtod(tok.text.c_str(), nullptr);
      } else {
        tok.kind = TokenKind::Int;
        std::uint64_t v = 0;
        for (char d : tok.text) {
          std::uint64_t next = v * 10 + static_cast<std::uint64_t>(d - '0');
          if (next / 10 != v) throw ParseError(line, col, "integer literal out of range");
          v = next;
        }
        if (v > (std::uint64_t{1} << 63))
          throw ParseError(line, col, "integer literal out of range");
        tok.int_value = v;
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }

    static const char* const two_char[] = {"==", "!=", "<=", ">=", "&&", "||", "->"};
    bool matched = false;
    for (const char* op : two_char) {
      if (src.substr(i, 2) == op) {
        tok.kind = TokenKind::Punct;
        tok.text = op;
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) {
      out.push_back(std::move(tok));
      continue;
    }

    static const std::string_view single = "{}()[];,.:=<>+-*/%!";
    if (single.find(c) == std::string_view::npos)
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    tok.kind = TokenKind::Punct;
    tok.text = std::string(1, c);
    advance(1);
    out.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokenKind::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

}  // namespace whyfail::lang
