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

#include "whyfail/lang/ast.hpp"

namespace whyfail::lang {

/// Pretty-prints a program as MiniLang source that parses back to the same AST.
std::string print_program(const Program& program);

std::string print_expr(const Expr& expr);

/// Line-independent structural dump, used to compare ASTs.
std::string dump_ast(const Program& program);

}  // namespace whyfail::lang
