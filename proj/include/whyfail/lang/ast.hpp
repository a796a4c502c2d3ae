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
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whyfail/lang/type.hpp"

namespace whyfail::lang {

/// Identity of a statement: its index in program order plus its source line.
struct LocationId {
  std::size_t ordinal = 0;
  int line = 0;

  friend bool operator==(const LocationId&, const LocationId&) = default;
};

enum class Builtin { None, Len, Sqrt, Floor, Ceil, Abs, ToFloat, ToInt };

struct FunctionDef;

struct Expr {
  enum class Kind {
    IntLit,
    FloatLit,
    BoolLit,
    NullLit,
    Var,
    Field,
    Index,
    Unary,
    Binary,
    Call,
    NewArray,
    ArrayLit,
    RecordLit,
  };

  Kind kind = Kind::IntLit;
  int line = 0;
  int column = 0;

  std::int64_t int_value = 0;
  double float_value = 0.0;
  bool bool_value = false;
  // Variable, field, callee or record name depending on kind.
  std::string name;
  std::string op;
  std::vector<std::unique_ptr<Expr>> children;
  // Field names of a record literal, parallel to children.
  std::vector<std::string> field_names;
  // Element type for `new T[n]`.
  Type declared;

  // Filled in by the typechecker.
  Type type;
  int field_index = -1;
  std::vector<int> literal_slots;
  const FunctionDef* callee = nullptr;
  Builtin builtin = Builtin::None;
};

using ExprPtr = std::unique_ptr<Expr>;

struct Stmt {
  enum class Kind { VarDecl, Assign, If, While, For, Assert, Return, ExprStmt };

  Kind kind = Kind::ExprStmt;
  LocationId loc;
  int column = 0;

  // VarDecl
  Type decl_type;
  std::string name;
  // Assign target (a Var, Field or Index expression).
  ExprPtr target;
  // Initializer, right-hand side, condition, asserted or returned value.
  ExprPtr value;
  // If: then/else; While/For: body is `body`.
  std::vector<std::unique_ptr<Stmt>> body;
  std::vector<std::unique_ptr<Stmt>> else_body;
  // For: init (VarDecl or Assign) and update (Assign); they share the For's
  // location and are not numbered on their own.
  std::unique_ptr<Stmt> init;
  std::unique_ptr<Stmt> update;

  bool is_loop() const { return kind == Kind::While || kind == Kind::For; }
  bool is_compound() const { return is_loop() || kind == Kind::If; }
};

using StmtPtr = std::unique_ptr<Stmt>;

struct FieldDef {
  Type type;
  std::string name;
};

struct RecordDef {
  std::string name;
  std::vector<FieldDef> fields;
  int line = 0;

  int field_index(const std::string& field) const;
};

struct Param {
  Type type;
  std::string name;
};

struct FunctionDef {
  std::string name;
  bool is_entry = false;
  std::vector<Param> params;
  Type return_type = Type::Void();
  std::vector<StmtPtr> body;
  int line = 0;
};

/// A parsed MiniLang compilation unit. Statements are numbered in program
/// order (functions in source order, pre-order within each body).
class Program {
 public:
  std::vector<std::shared_ptr<const RecordDef>> records;
  std::vector<std::unique_ptr<FunctionDef>> functions;

  const FunctionDef& entry() const;
  const FunctionDef* find_function(const std::string& name) const;
  std::shared_ptr<const RecordDef> find_record(const std::string& name) const;

  std::size_t statement_count() const { return statements_.size(); }
  const Stmt& statement(std::size_t ordinal) const { return *statements_.at(ordinal); }

  // Assigns ordinals and collects the statement table. Called by the parser.
  void number_statements();

 private:
  std::vector<const Stmt*> statements_;
};

}  // namespace whyfail::lang
