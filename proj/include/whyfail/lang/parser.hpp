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

#include <memory>
#include <string_view>

#include "whyfail/lang/ast.hpp"
#include "whyfail/lang/lexer.hpp"

namespace whyfail::lang {

/// Parses a compilation unit. Throws ParseError; an input without an `entry`
/// function is rejected with "no entry function".
std::unique_ptr<Program> parse_program(std::string_view source);

}  // namespace whyfail::lang
