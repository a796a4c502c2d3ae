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

#include "whyfail/lang/typecheck.hpp"

#include <map>
#include <set>

#include "whyfail/lang/parser.hpp"

namespace whyfail::lang {

TypeCheckError::TypeCheckError(std::vector<TypeError> errors)
    : std::runtime_error([&] {
        std::string msg;
        for (const auto& e : errors) {
          if (!msg.empty()) msg += "\n";
          msg += "line " + std::to_string(e.loc.line) + ": " + e.message;
        }
        return msg;
      }()),
      errors_(std::move(errors)) {}

TypedProgram::TypedProgram(std::shared_ptr<const Program> program, std::vector<StatementInfo> info,
                           std::optional<std::size_t> designated_assertion)
    : program_(std::move(program)), info_(std::move(info)), assertion_(designated_assertion) {}

namespace {

const std::map<std::string, Builtin> kBuiltins = {
    {"len", Builtin::Len},     {"sqrt", Builtin::Sqrt}, {"floor", Builtin::Floor},
    {"ceil", Builtin::Ceil},   {"abs", Builtin::Abs},   {"float", Builtin::ToFloat},
    {"int", Builtin::ToInt},
};

struct Failure {
  std::string message;
};

[[noreturn]] void fail(const Expr& at, const std::string& message) {
  throw Failure{"column " + std::to_string(at.column) + ": " + message};
}

class Checker {
 public:
  explicit Checker(Program& program) : program_(program) {}

  TypedProgram run(std::unique_ptr<Program> owned) {
    check_records();
    check_signatures();
    info_.resize(program_.statement_count());
    for (auto& fn : program_.functions) check_function(*fn);
    if (!errors_.empty()) throw TypeCheckError(std::move(errors_));

    std::optional<std::size_t> assertion;
    for (std::size_t i = 0; i < program_.statement_count(); ++i) {
      if (info_[i].function->is_entry && program_.statement(i).kind == Stmt::Kind::Assert) {
        assertion = i;
        break;
      }
    }
    return TypedProgram(std::shared_ptr<const Program>(std::move(owned)), std::move(info_),
                        assertion);
  }

 private:
  void error(int line, std::size_t ordinal, const std::string& message) {
    errors_.push_back(TypeError{LocationId{ordinal, line}, message});
  }

  bool valid_type(const Type& t) const {
    switch (t.kind()) {
      case TypeKind::Int:
      case TypeKind::Float:
      case TypeKind::Bool: return true;
      case TypeKind::Record: return program_.find_record(t.record_name()) != nullptr;
      case TypeKind::Array: return valid_type(t.element());
      default: return false;
    }
  }

  void check_records() {
    std::set<std::string> names;
    for (const auto& rec : program_.records) {
      if (!names.insert(rec->name).second) error(rec->line, 0, "duplicate record '" + rec->name + "'");
      std::set<std::string> fields;
      for (const auto& f : rec->fields) {
        if (!fields.insert(f.name).second)
          error(rec->line, 0, "duplicate field '" + f.name + "' in record '" + rec->name + "'");
        if (!valid_type(f.type))
          error(rec->line, 0, "unknown type '" + f.type.str() + "' for field '" + f.name + "'");
        if (f.name == "isNull" || f.name == "length")
          error(rec->line, 0, "field name '" + f.name + "' is reserved");
      }
    }
  }

  void check_signatures() {
    std::set<std::string> names;
    for (const auto& fn : program_.functions) {
      if (kBuiltins.count(fn->name))
        error(fn->line, 0, "function '" + fn->name + "' shadows a builtin");
      if (!names.insert(fn->name).second)
        error(fn->line, 0, "duplicate function '" + fn->name + "'");
      std::set<std::string> params;
      for (const auto& p : fn->params) {
        if (!params.insert(p.name).second)
          error(fn->line, 0, "duplicate parameter '" + p.name + "'");
        if (!valid_type(p.type))
          error(fn->line, 0, "unknown type '" + p.type.str() + "' for parameter '" + p.name + "'");
      }
      if (fn->return_type.kind() != TypeKind::Void && !valid_type(fn->return_type))
        error(fn->line, 0, "unknown return type '" + fn->return_type.str() + "'");
    }
  }

  // ---- scopes

  const Type* lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (auto f = it->find(name); f != it->end()) return &f->second;
    return nullptr;
  }

  void declare(const Stmt& s, const std::string& name, const Type& type) {
    if (lookup(name)) {
      error(s.loc.line, s.loc.ordinal, "'" + name + "' is already declared in an enclosing scope");
      return;
    }
    scopes_.back().emplace(name, type);
  }

  // ---- statements

  void check_function(FunctionDef& fn) {
    fn_ = &fn;
    scopes_.clear();
    scopes_.emplace_back();
    for (const auto& p : fn.params) scopes_.back().emplace(p.name, p.type);
    loops_.clear();
    check_list(fn.body, std::nullopt);
  }

  void check_list(std::vector<StmtPtr>& list, std::optional<std::size_t> parent) {
    scopes_.emplace_back();
    for (std::size_t i = 0; i < list.size(); ++i) {
      Stmt& s = *list[i];
      StatementInfo& info = info_[s.loc.ordinal];
      info.function = fn_;
      info.siblings = &list;
      info.position = i;
      info.enclosing_loops = loops_;
      info.parent = parent;
      has_call_ = false;
      check_stmt(s);
    }
    scopes_.pop_back();
  }

  void check_stmt(Stmt& s) {
    const std::size_t ordinal = s.loc.ordinal;
    auto guarded = [&](auto&& body) {
      try {
        body();
      } catch (const Failure& f) {
        error(s.loc.line, ordinal, f.message);
      }
    };

    switch (s.kind) {
      case Stmt::Kind::VarDecl:
      case Stmt::Kind::Assign:
      case Stmt::Kind::ExprStmt:
      case Stmt::Kind::Assert:
      case Stmt::Kind::Return:
        guarded([&] { check_simple(s); });
        info_[ordinal].has_call = has_call_;
        return;
      case Stmt::Kind::If:
        guarded([&] { expect_bool(*s.value, "if condition"); });
        info_[ordinal].has_call = has_call_;
        check_list(s.body, ordinal);
        check_list(s.else_body, ordinal);
        return;
      case Stmt::Kind::While:
        guarded([&] { expect_bool(*s.value, "while condition"); });
        info_[ordinal].has_call = has_call_;
        loops_.push_back(ordinal);
        check_list(s.body, ordinal);
        loops_.pop_back();
        return;
      case Stmt::Kind::For: {
        // The loop variable lives in a scope around the loop.
        scopes_.emplace_back();
        guarded([&] { check_simple(*s.init); });
        guarded([&] { expect_bool(*s.value, "for condition"); });
        guarded([&] { check_simple(*s.update); });
        info_[ordinal].has_call = has_call_;
        loops_.push_back(ordinal);
        check_list(s.body, ordinal);
        loops_.pop_back();
        scopes_.pop_back();
        return;
      }
    }
  }

  void check_simple(Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::VarDecl: {
        if (!valid_type(s.decl_type)) {
          declare(s, s.name, Type::Int());
          throw Failure{"unknown type '" + s.decl_type.str() + "'"};
        }
        Type t;
        try {
          t = check_expr(*s.value);
        } catch (const Failure&) {
          declare(s, s.name, s.decl_type);
          throw;
        }
        declare(s, s.name, s.decl_type);
        expect_assignable(s.decl_type, t, *s.value, "initializer of '" + s.name + "'");
        return;
      }
      case Stmt::Kind::Assign: {
        Type target = check_expr(*s.target);
        Type t = check_expr(*s.value);
        expect_assignable(target, t, *s.value, "assignment");
        return;
      }
      case Stmt::Kind::ExprStmt:
        check_expr(*s.value, /*allow_void=*/true);
        return;
      case Stmt::Kind::Assert:
        expect_bool(*s.value, "assertion");
        return;
      case Stmt::Kind::Return: {
        const Type& want = fn_->return_type;
        if (!s.value) {
          if (want.kind() != TypeKind::Void)
            throw Failure{"missing return value in '" + fn_->name + "'"};
          return;
        }
        if (want.kind() == TypeKind::Void) fail(*s.value, "void function returns a value");
        expect_assignable(want, check_expr(*s.value), *s.value, "return value");
        return;
      }
      default:
        throw Failure{"unexpected statement"};
    }
  }

  void expect_bool(Expr& e, const std::string& what) {
    Type t = check_expr(e);
    if (t.kind() != TypeKind::Bool) fail(e, what + " must be bool, got " + t.str());
  }

  static void expect_assignable(const Type& to, const Type& from, const Expr& at,
                                const std::string& what) {
    if (!to.accepts(from)) fail(at, what + ": cannot store " + from.str() + " in " + to.str());
  }

  // ---- expressions

  Type check_expr(Expr& e, bool allow_void = false) {
    e.type = infer(e);
    if (e.type.kind() == TypeKind::Void && !allow_void) fail(e, "void value used in expression");
    return e.type;
  }

  Type infer(Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLit: return Type::Int();
      case Expr::Kind::FloatLit: return Type::Float();
      case Expr::Kind::BoolLit: return Type::Bool();
      case Expr::Kind::NullLit: return Type::Null();
      case Expr::Kind::Var: {
        const Type* t = lookup(e.name);
        if (!t) fail(e, "undeclared variable '" + e.name + "'");
        return *t;
      }
      case Expr::Kind::Field: {
        Type base = check_expr(*e.children[0]);
        if (base.kind() != TypeKind::Record)
          fail(e, "field access '." + e.name + "' on non-record " + base.str());
        auto rec = program_.find_record(base.record_name());
        e.field_index = rec->field_index(e.name);
        if (e.field_index < 0) fail(e, "record '" + rec->name + "' has no field '" + e.name + "'");
        return rec->fields[e.field_index].type;
      }
      case Expr::Kind::Index: {
        Type base = check_expr(*e.children[0]);
        if (base.kind() != TypeKind::Array) fail(e, "indexing non-array " + base.str());
        if (check_expr(*e.children[1]).kind() != TypeKind::Int) fail(e, "array index must be int");
        return base.element();
      }
      case Expr::Kind::Unary: {
        Type t = check_expr(*e.children[0]);
        if (e.op == "!") {
          if (t.kind() != TypeKind::Bool) fail(e, "'!' needs bool, got " + t.str());
          return t;
        }
        if (!t.is_numeric()) fail(e, "unary '-' needs a number, got " + t.str());
        return t;
      }
      case Expr::Kind::Binary: return infer_binary(e);
      case Expr::Kind::Call: return infer_call(e);
      case Expr::Kind::NewArray: {
        if (!valid_type(e.declared)) fail(e, "unknown type '" + e.declared.str() + "'");
        if (check_expr(*e.children[0]).kind() != TypeKind::Int) fail(e, "array size must be int");
        return Type::ArrayOf(e.declared);
      }
      case Expr::Kind::ArrayLit: {
        Type elem = check_expr(*e.children[0]);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
          Type t = check_expr(*e.children[i]);
          if (elem.accepts(t)) continue;
          if (t.accepts(elem)) {
            elem = t;
            continue;
          }
          fail(*e.children[i], "array literal mixes " + elem.str() + " and " + t.str());
        }
        if (elem.kind() == TypeKind::Null) fail(e, "cannot infer element type of null array");
        return Type::ArrayOf(elem);
      }
      case Expr::Kind::RecordLit: {
        auto rec = program_.find_record(e.name);
        if (!rec) fail(e, "unknown record '" + e.name + "'");
        e.literal_slots.clear();
        std::set<int> seen;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          int slot = rec->field_index(e.field_names[i]);
          if (slot < 0) fail(e, "record '" + e.name + "' has no field '" + e.field_names[i] + "'");
          if (!seen.insert(slot).second) fail(e, "field '" + e.field_names[i] + "' given twice");
          expect_assignable(rec->fields[slot].type, check_expr(*e.children[i]), *e.children[i],
                            "field '" + e.field_names[i] + "'");
          e.literal_slots.push_back(slot);
        }
        return Type::Record(e.name);
      }
    }
    fail(e, "unknown expression");
  }

  Type infer_binary(Expr& e) {
    Type a = check_expr(*e.children[0]);
    Type b = check_expr(*e.children[1]);
    const std::string& op = e.op;
    if (op == "&&" || op == "||") {
      if (a.kind() != TypeKind::Bool || b.kind() != TypeKind::Bool)
        fail(e, "'" + op + "' needs bool operands");
      return Type::Bool();
    }
    if (op == "==" || op == "!=") {
      bool ok = (a.is_numeric() && b.is_numeric()) ||
                (a.kind() == TypeKind::Bool && b.kind() == TypeKind::Bool) ||
                (a.kind() != TypeKind::Array && (a.accepts(b) || b.accepts(a)) &&
                 (a.is_reference() || b.is_reference() ||
                  (a.kind() == TypeKind::Null && b.kind() == TypeKind::Null)));
      if (!ok) fail(e, "cannot compare " + a.str() + " with " + b.str());
      return Type::Bool();
    }
    if (!a.is_numeric() || !b.is_numeric())
      fail(e, "'" + op + "' needs numbers, got " + a.str() + " and " + b.str());
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return Type::Bool();
    if (op == "%" && (a.kind() != TypeKind::Int || b.kind() != TypeKind::Int))
      fail(e, "'%' needs int operands");
    return (a.kind() == TypeKind::Float || b.kind() == TypeKind::Float) ? Type::Float()
                                                                          : Type::Int();
  }

  Type infer_call(Expr& e) {
    if (auto b = kBuiltins.find(e.name); b != kBuiltins.end()) {
      e.builtin = b->second;
      if (e.children.size() != 1) fail(e, "'" + e.name + "' takes one argument");
      Type t = check_expr(*e.children[0]);
      if (e.builtin == Builtin::Len) {
        if (t.kind() != TypeKind::Array) fail(e, "len() needs an array");
        return Type::Int();
      }
      if (!t.is_numeric()) fail(e, "'" + e.name + "' needs a number");
      switch (e.builtin) {
        case Builtin::Abs: return t;
        case Builtin::ToInt: return Type::Int();
        default: return Type::Float();
      }
    }
    const FunctionDef* fn = program_.find_function(e.name);
    if (!fn) fail(e, "unknown function '" + e.name + "'");
    if (fn->params.size() != e.children.size())
      fail(e, "'" + e.name + "' expects " + std::to_string(fn->params.size()) + " arguments");
    for (std::size_t i = 0; i < e.children.size(); ++i)
      expect_assignable(fn->params[i].type, check_expr(*e.children[i]), *e.children[i],
                        "argument " + std::to_string(i + 1) + " of '" + e.name + "'");
    e.callee = fn;
    has_call_ = true;
    return fn->return_type;
  }

  Program& program_;
  std::vector<TypeError> errors_;
  std::vector<StatementInfo> info_;
  const FunctionDef* fn_ = nullptr;
  std::vector<std::map<std::string, Type>> scopes_;
  std::vector<std::size_t> loops_;
  bool has_call_ = false;
};

}  // namespace

TypedProgram typecheck(std::unique_ptr<Program> program) {
  Program& ref = *program;
  return Checker(ref).run(std::move(program));
}

TypedProgram load_program(std::string_view source) { return typecheck(parse_program(source)); }

}  // namespace whyfail::lang
