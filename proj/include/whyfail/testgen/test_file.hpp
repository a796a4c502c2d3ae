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

#include <string>
#include <string_view>
#include <vector>

#include "whyfail/interp/interpreter.hpp"
#include "whyfail/lang/lexer.hpp"
#include "whyfail/lang/typecheck.hpp"

namespace whyfail::testgen {

/// Parses one value literal of the given type, e.g. `Stu{score: 94, ID: 1}`,
/// `[1, 2]`, `null`, `-0.5`, `nan`. Missing record fields take defaults.
lang::Value parse_value(const lang::TypedProgram& program, const lang::Type& type,
                        std::string_view text);

/// Loads a test file: one bracketed argument list per line, `#` comments.
/// Test ids follow line order starting at 1. Throws lang::ParseError.
std::vector<interp::TestCase> parse_tests(const lang::TypedProgram& program,
                                          std::string_view text);

std::string format_test(const interp::TestCase& test);
std::string format_tests(const std::vector<interp::TestCase>& tests);

std::vector<interp::TestCase> load_tests(const lang::TypedProgram& program,
                                         const std::string& path);
void save_tests(const std::vector<interp::TestCase>& tests, const std::string& path);

}  // namespace whyfail::testgen
