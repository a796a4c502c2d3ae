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

#include "whyfail/lang/printer.hpp"

#include <sstream>

#include "whyfail/lang/value.hpp"

namespace whyfail::lang {

namespace {

int precedence(const std::string& op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
  if (op == "+" || op == "-") return 5;
  return 6;
}

// Binding strength of an expression when used as an operand.
int strength(const Expr& e) {
  if (e.kind == Expr::Kind::Binary) return precedence(e.op);
  if (e.kind == Expr::Kind::Unary) return 7;
  return 8;
}

std::string operand(const Expr& e, int min) {
  std::string s = print_expr(e);
  return strength(e) < min ? "(" + s + ")" : s;
}

void print_stmt(std::ostringstream& out, const Stmt& s, int indent);

void print_block(std::ostringstream& out, const std::vector<StmtPtr>& body, int indent) {
  out << "{\n";
  for (const auto& s : body) print_stmt(out, *s, indent + 1);
  out << std::string(2 * indent, ' ') << "}";
}

std::string simple(const Stmt& s) {
  switch (s.kind) {
    case Stmt::Kind::VarDecl:
      return s.decl_type.str() + " " + s.name + " = " + print_expr(*s.value);
    case Stmt::Kind::Assign: return print_expr(*s.target) + " = " + print_expr(*s.value);
    case Stmt::Kind::ExprStmt: return print_expr(*s.value);
    case Stmt::Kind::Assert: return "assert " + print_expr(*s.value);
    case Stmt::Kind::Return: return s.value ? "return " + print_expr(*s.value) : "return";
    default: return "";
  }
}

void print_stmt(std::ostringstream& out, const Stmt& s, int indent) {
  const std::string pad(2 * indent, ' ');
  out << pad;
  switch (s.kind) {
    case Stmt::Kind::If: {
      const Stmt* cur = &s;
      out << "if (" << print_expr(*cur->value) << ") ";
      print_block(out, cur->body, indent);
      // Collapse `else { if ... }` chains back to `else if`.
      while (cur->else_body.size() == 1 && cur->else_body[0]->kind == Stmt::Kind::If) {
        cur = cur->else_body[0].get();
        out << " else if (" << print_expr(*cur->value) << ") ";
        print_block(out, cur->body, indent);
      }
      if (!cur->else_body.empty()) {
        out << " else ";
        print_block(out, cur->else_body, indent);
      }
      out << "\n";
      return;
    }
    case Stmt::Kind::While:
      out << "while (" << print_expr(*s.value) << ") ";
      print_block(out, s.body, indent);
      out << "\n";
      return;
    case Stmt::Kind::For:
      out << "for (" << simple(*s.init) << "; " << print_expr(*s.value) << "; "
          << simple(*s.update) << ") ";
      print_block(out, s.body, indent);
      out << "\n";
      return;
    default: out << simple(s) << ";\n";
  }
}

}  // namespace

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::IntLit:
      // 2^63 lexes as a literal and wraps; print it the way it was written.
      return e.int_value < 0 ? std::to_string(static_cast<std::uint64_t>(e.int_value))
                             : std::to_string(e.int_value);
    case Expr::Kind::FloatLit: return format_double(e.float_value);
    case Expr::Kind::BoolLit: return e.bool_value ? "true" : "false";
    case Expr::Kind::NullLit: return "null";
    case Expr::Kind::Var: return e.name;
    case Expr::Kind::Field: return operand(*e.children[0], 8) + "." + e.name;
    case Expr::Kind::Index:
      return operand(*e.children[0], 8) + "[" + print_expr(*e.children[1]) + "]";
    case Expr::Kind::Unary: return e.op + operand(*e.children[0], 7);
    case Expr::Kind::Binary: {
      int p = precedence(e.op);
      // Left-associative: the right operand needs parentheses at equal strength.
      return operand(*e.children[0], p) + " " + e.op + " " + operand(*e.children[1], p + 1);
    }
    case Expr::Kind::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.children.size(); ++i)
        s += (i ? ", " : "") + print_expr(*e.children[i]);
      return s + ")";
    }
    case Expr::Kind::NewArray: {
      // `new T[n][]...`: the outermost dimension carries the size.
      Type base = e.declared;
      std::string dims;
      while (base.kind() == TypeKind::Array) {
        dims += "[]";
        base = base.element();
      }
      return "new " + base.str() + "[" + print_expr(*e.children[0]) + "]" + dims;
    }
    case Expr::Kind::ArrayLit: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.children.size(); ++i)
        s += (i ? ", " : "") + print_expr(*e.children[i]);
      return s + "]";
    }
    case Expr::Kind::RecordLit: {
      std::string s = e.name + "{";
      for (std::size_t i = 0; i < e.children.size(); ++i)
        s += (i ? ", " : "") + e.field_names[i] + ": " + print_expr(*e.children[i]);
      return s + "}";
    }
  }
  return "";
}

std::string print_program(const Program& program) {
  std::ostringstream out;
  for (const auto& rec : program.records) {
    out << "record " << rec->name << " {\n";
    for (const auto& f : rec->fields) out << "  " << f.type.str() << " " << f.name << ";\n";
    out << "}\n\n";
  }
  for (std::size_t i = 0; i < program.functions.size(); ++i) {
    const FunctionDef& fn = *program.functions[i];
    if (i) out << "\n";
    out << (fn.is_entry ? "entry fn " : "fn ") << fn.name << "(";
    for (std::size_t p = 0; p < fn.params.size(); ++p)
      out << (p ? ", " : "") << fn.params[p].type.str() << " " << fn.params[p].name;
    out << ")";
    if (fn.return_type.kind() != TypeKind::Void) out << " -> " << fn.return_type.str();
    out << " ";
    print_block(out, fn.body, 0);
    out << "\n";
  }
  return out.str();
}

namespace {

void dump_expr(std::ostringstream& out, const Expr& e) {
  out << "(" << static_cast<int>(e.kind);
  switch (e.kind) {
    case Expr::Kind::IntLit: out << " " << e.int_value; break;
    case Expr::Kind::FloatLit: out << " " << format_double(e.float_value); break;
    case Expr::Kind::BoolLit: out << " " << e.bool_value; break;
    case Expr::Kind::NewArray: out << " " << e.declared.str(); break;
    default: break;
  }
  if (!e.name.empty()) out << " " << e.name;
  if (!e.op.empty()) out << " " << e.op;
  for (const auto& f : e.field_names) out << " " << f << ":";
  for (const auto& c : e.children) {
    out << " ";
    dump_expr(out, *c);
  }
  out << ")";
}

void dump_stmts(std::ostringstream& out, const std::vector<StmtPtr>& body);

void dump_stmt(std::ostringstream& out, const Stmt& s) {
  out << "[" << static_cast<int>(s.kind) << " #" << s.loc.ordinal;
  if (s.kind == Stmt::Kind::VarDecl) out << " " << s.decl_type.str() << " " << s.name;
  if (s.target) {
    out << " ";
    dump_expr(out, *s.target);
  }
  if (s.value) {
    out << " ";
    dump_expr(out, *s.value);
  }
  if (s.init) {
    out << " init";
    dump_stmt(out, *s.init);
  }
  if (s.update) {
    out << " update";
    dump_stmt(out, *s.update);
  }
  out << " ";
  dump_stmts(out, s.body);
  out << " ";
  dump_stmts(out, s.else_body);
  out << "]";
}

void dump_stmts(std::ostringstream& out, const std::vector<StmtPtr>& body) {
  out << "{";
  for (const auto& s : body) dump_stmt(out, *s);
  out << "}";
}

}  // namespace

std::string dump_ast(const Program& program) {
  std::ostringstream out;
  for (const auto& rec : program.records) {
    out << "record " << rec->name;
    for (const auto& f : rec->fields) out << " " << f.type.str() << ":" << f.name;
    out << "\n";
  }
  for (const auto& fn : program.functions) {
    out << (fn->is_entry ? "entry " : "") << fn->name << " ->" << fn->return_type.str();
    for (const auto& p : fn->params) out << " " << p.type.str() << ":" << p.name;
    out << " ";
    dump_stmts(out, fn->body);
    out << "\n";
  }
  return out.str();
}

}  // namespace whyfail::lang
