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

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "whyfail/lang/ast.hpp"

namespace whyfail::lang {

struct TypeError {
  LocationId loc;
  std::string message;
};

class TypeCheckError : public std::runtime_error {
 public:
  explicit TypeCheckError(std::vector<TypeError> errors);
  const std::vector<TypeError>& errors() const { return errors_; }

 private:
  std::vector<TypeError> errors_;
};

/// Static facts about one numbered statement.
struct StatementInfo {
  const FunctionDef* function = nullptr;
  // The statement list that directly contains this statement and its index.
  const std::vector<StmtPtr>* siblings = nullptr;
  std::size_t position = 0;
  // Ordinals of enclosing loops in the same function, outermost first.
  std::vector<std::size_t> enclosing_loops;
  // Enclosing compound statement (if/while/for), if any.
  std::optional<std::size_t> parent;
  // Contains a call to a user-defined function.
  bool has_call = false;
};

/// A typechecked, immutable program plus per-statement metadata.
class TypedProgram {
 public:
  TypedProgram(std::shared_ptr<const Program> program, std::vector<StatementInfo> info,
               std::optional<std::size_t> designated_assertion);

  const Program& program() const { return *program_; }
  std::shared_ptr<const Program> shared() const { return program_; }
  const StatementInfo& info(std::size_t ordinal) const { return info_.at(ordinal); }
  std::size_t statement_count() const { return program_->statement_count(); }
  const Stmt& statement(std::size_t ordinal) const { return program_->statement(ordinal); }

  /// The first `assert` of the entry function in program order.
  std::optional<std::size_t> designated_assertion() const { return assertion_; }

 private:
  std::shared_ptr<const Program> program_;
  std::vector<StatementInfo> info_;
  std::optional<std::size_t> assertion_;
};

/// Resolves names and types in place and freezes the program. Throws
/// TypeCheckError carrying every violation found.
TypedProgram typecheck(std::unique_ptr<Program> program);

/// parse_program followed by typecheck.
TypedProgram load_program(std::string_view source);

}  // namespace whyfail::lang
