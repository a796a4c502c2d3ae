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

#include "whyfail/testgen/test_file.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace whyfail::testgen {

namespace {

using lang::ParseError;
using lang::Token;
using lang::TokenKind;
using lang::Type;
using lang::TypeKind;
using lang::Value;

class ValueParser {
 public:
  ValueParser(const lang::TypedProgram& program, std::vector<Token> tokens, int line)
      : program_(program), toks_(std::move(tokens)), line_(line) {}

  std::vector<Value> argument_list(const std::vector<lang::Param>& params) {
    expect("[");
    std::vector<Value> out;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) expect(",");
      out.push_back(value(params[i].type));
    }
    if (is(",")) fail("too many arguments; entry function takes " + std::to_string(params.size()));
    expect("]");
    end();
    return out;
  }

  Value single(const Type& type) {
    Value v = value(type);
    end();
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const char* p) const { return peek().kind == TokenKind::Punct && peek().text == p; }
  bool is_word(const char* w) const { return peek().kind == TokenKind::Ident && peek().text == w; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, peek().column, msg);
  }
  void expect(const char* p) {
    if (!is(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }
  void end() {
    if (peek().kind != TokenKind::End) fail("unexpected trailing input");
  }

  Value value(const Type& type) {
    switch (type.kind()) {
      case TypeKind::Int: return integer();
      case TypeKind::Float: return floating();
      case TypeKind::Bool:
        if (is_word("true") || is_word("false")) return toks_[pos_++].text == "true";
        fail("expected bool");
      case TypeKind::Array: {
        expect("[");
        auto arr = std::make_shared<lang::ArrayObject>();
        arr->element = type.element();
        if (!is("]")) {
          do {
            if (is(",")) ++pos_;
            arr->elements.push_back(value(type.element()));
          } while (is(","));
        }
        expect("]");
        return arr;
      }
      case TypeKind::Record: return record(type);
      default: fail("unsupported type " + type.str());
    }
  }

  Value record(const Type& type) {
    if (is_word("null")) {
      ++pos_;
      return lang::NullValue{};
    }
    if (peek().kind != TokenKind::Ident || peek().text != type.record_name())
      fail("expected " + type.record_name() + " literal or null");
    ++pos_;
    auto def = program_.program().find_record(type.record_name());
    auto rec = std::make_shared<lang::RecordObject>();
    rec->def = def;
    for (const auto& f : def->fields) rec->fields.push_back(lang::default_value(f.type));
    expect("{");
    if (!is("}")) {
      do {
        if (is(",")) ++pos_;
        if (peek().kind != TokenKind::Ident) fail("expected field name");
        std::string name = toks_[pos_++].text;
        int slot = def->field_index(name);
        if (slot < 0) fail("record " + def->name + " has no field '" + name + "'");
        expect(":");
        rec->fields[static_cast<std::size_t>(slot)] = value(def->fields[slot].type);
      } while (is(","));
    }
    expect("}");
    return rec;
  }

  bool negative() {
    if (is("-")) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value integer() {
    bool neg = negative();
    if (peek().kind != TokenKind::Int) fail("expected int");
    std::uint64_t v = toks_[pos_++].int_value;
    if (!neg && v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      fail("int out of range");
    return static_cast<std::int64_t>(neg ? 0 - v : v);
  }

  Value floating() {
    bool neg = negative();
    double v;
    if (peek().kind == TokenKind::Int) {
      // strtod rounds large integers correctly.
      v = std::strtod(toks_[pos_].text.c_str(), nullptr);
    } else if (peek().kind == TokenKind::Float) {
      v = toks_[pos_].float_value;
    } else if (is_word("nan")) {
      v = std::numeric_limits<double>::quiet_NaN();
    } else if (is_word("inf")) {
      v = std::numeric_limits<double>::infinity();
    } else {
      fail("expected float");
    }
    ++pos_;
    return neg ? -v : v;
  }

  const lang::TypedProgram& program_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::vector<Token> tokens_at(std::string_view text, int line) {
  try {
    return lang::tokenize(text);
  } catch (const ParseError& e) {
    throw ParseError(line, e.column(), e.message());
  }
}

}  // namespace

Value parse_value(const lang::TypedProgram& program, const Type& type, std::string_view text) {
  return ValueParser(program, tokens_at(text, 1), 1).single(type);
}

std::vector<interp::TestCase> parse_tests(const lang::TypedProgram& program,
                                          std::string_view text) {
  const auto& params = program.program().entry().params;
  std::vector<interp::TestCase> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view row = text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                           : nl - start);
    ++line;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::size_t hash = row.find('#');
    if (hash != std::string_view::npos) row = row.substr(0, hash);
    if (row.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    interp::TestCase t;
    t.id = out.size() + 1;
    t.args = ValueParser(program, tokens_at(row, line), line).argument_list(params);
    out.push_back(std::move(t));
  }
  return out;
}

std::string format_test(const interp::TestCase& test) {
  std::string out = "[";
  for (std::size_t i = 0; i < test.args.size(); ++i) {
    if (i) out += ", ";
    out += lang::format_value(test.args[i]);
  }
  return out + "]";
}

std::string format_tests(const std::vector<interp::TestCase>& tests) {
  std::string out;
  for (const auto& t : tests) out += format_test(t) + "\n";
  return out;
}

std::vector<interp::TestCase> load_tests(const lang::TypedProgram& program,
                                         const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open test file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tests(program, buf.str());
}

void save_tests(const std::vector<interp::TestCase>& tests, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write test file '" + path + "'");
  out << format_tests(tests);
}

}  // namespace whyfail::testgen
