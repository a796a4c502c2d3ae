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

#include "whyfail/lang/parser.hpp"

#include <set>

namespace whyfail::lang {

namespace {

const std::set<std::string> kKeywords = {"record", "fn",     "entry", "if",   "else",
                                         "while",  "for",    "assert", "return", "true",
                                         "false",  "null",   "new",   "int",  "float",
                                         "bool"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i)
      if (toks_[i].kind == TokenKind::Ident && toks_[i].text == "record" &&
          toks_[i + 1].kind == TokenKind::Ident)
        record_names_.insert(toks_[i + 1].text);
  }

  std::unique_ptr<Program> parse() {
    auto program = std::make_unique<Program>();
    while (!at_end()) {
      if (is_word("record")) {
        program->records.push_back(parse_record());
      } else if (is_word("entry") || is_word("fn")) {
        program->functions.push_back(parse_function());
      } else {
        fail("expected 'record', 'fn' or 'entry fn'");
      }
    }
    int entries = 0;
    for (const auto& f : program->functions) entries += f->is_entry ? 1 : 0;
    if (entries == 0) throw ParseError(1, 1, "no entry function");
    if (entries > 1) throw ParseError(1, 1, "more than one entry function");
    program->number_statements();
    return program;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Punct && peek(ahead).text == p;
  }
  bool is_word(const char* w, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Ident && peek(ahead).text == w;
  }
  bool is_plain_ident(std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Ident && !kKeywords.count(peek(ahead).text);
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, message + ", found " + found);
  }

  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'");
    take();
  }
  void expect_word(const char* w) {
    if (!is_word(w)) fail(std::string("expected '") + w + "'");
    take();
  }
  std::string expect_ident(const char* what) {
    if (!is_plain_ident()) fail(std::string("expected ") + what);
    return take().text;
  }

  bool type_start(std::size_t ahead = 0) const {
    return is_word("int", ahead) || is_word("float", ahead) || is_word("bool", ahead) ||
           (is_plain_ident(ahead) && record_names_.count(peek(ahead).text));
  }

  Type parse_base_type() {
    if (is_word("int")) return take(), Type::Int();
    if (is_word("float")) return take(), Type::Float();
    if (is_word("bool")) return take(), Type::Bool();
    return Type::Record(expect_ident("type name"));
  }

  Type parse_type() {
    Type t = parse_base_type();
    while (is_punct("[") && is_punct("]", 1)) {
      take();
      take();
      t = Type::ArrayOf(t);
    }
    return t;
  }

  std::shared_ptr<const RecordDef> parse_record() {
    auto rec = std::make_shared<RecordDef>();
    rec->line = peek().line;
    expect_word("record");
    rec->name = expect_ident("record name");
    expect_punct("{");
    while (!is_punct("}")) {
      FieldDef f;
      f.type = parse_type();
      f.name = expect_ident("field name");
      expect_punct(";");
      rec->fields.push_back(std::move(f));
    }
    expect_punct("}");
    return rec;
  }

  std::unique_ptr<FunctionDef> parse_function() {
    auto fn = std::make_unique<FunctionDef>();
    fn->line = peek().line;
    if (is_word("entry")) {
      take();
      fn->is_entry = true;
    }
    expect_word("fn");
    fn->name = expect_ident("function name");
    expect_punct("(");
    if (!is_punct(")")) {
      do {
        Param p;
        p.type = parse_type();
        p.name = expect_ident("parameter name");
        fn->params.push_back(std::move(p));
      } while (is_punct(",") && (take(), true));
    }
    expect_punct(")");
    if (is_punct("->")) {
      take();
      fn->return_type = parse_type();
    }
    fn->body = parse_block();
    return fn;
  }

  std::vector<StmtPtr> parse_block() {
    expect_punct("{");
    std::vector<StmtPtr> out;
    while (!is_punct("}")) {
      if (at_end()) fail("expected '}'");
      out.push_back(parse_stmt());
    }
    take();
    return out;
  }

  StmtPtr new_stmt(Stmt::Kind kind) {
    auto s = std::make_unique<Stmt>();
    s->kind = kind;
    s->loc.line = peek().line;
    s->column = peek().column;
    return s;
  }

  bool decl_start() const {
    if (is_word("int") || is_word("float")) return !is_punct("(", 1);
    if (is_word("bool")) return true;
    if (!is_plain_ident()) return false;
    if (is_plain_ident(1)) return true;
    return is_punct("[", 1) && is_punct("]", 2);
  }

  StmtPtr parse_decl() {
    auto s = new_stmt(Stmt::Kind::VarDecl);
    s->decl_type = parse_type();
    s->name = expect_ident("variable name");
    expect_punct("=");
    s->value = parse_expr();
    return s;
  }

  StmtPtr parse_assign_or_call() {
    auto s = new_stmt(Stmt::Kind::ExprStmt);
    ExprPtr lhs = parse_expr();
    if (is_punct("=")) {
      if (lhs->kind != Expr::Kind::Var && lhs->kind != Expr::Kind::Field &&
          lhs->kind != Expr::Kind::Index)
        throw ParseError(lhs->line, lhs->column, "left side of '=' is not assignable");
      take();
      s->kind = Stmt::Kind::Assign;
      s->target = std::move(lhs);
      s->value = parse_expr();
    } else {
      if (lhs->kind != Expr::Kind::Call)
        throw ParseError(lhs->line, lhs->column, "expression statement must be a call");
      s->value = std::move(lhs);
    }
    return s;
  }

  StmtPtr parse_if() {
    auto s = new_stmt(Stmt::Kind::If);
    expect_word("if");
    expect_punct("(");
    s->value = parse_expr();
    expect_punct(")");
    s->body = parse_block();
    if (is_word("else")) {
      take();
      if (is_word("if")) {
        s->else_body.push_back(parse_if());
      } else {
        s->else_body = parse_block();
      }
    }
    return s;
  }

  StmtPtr parse_stmt() {
    if (is_word("if")) return parse_if();
    if (is_word("while")) {
      auto s = new_stmt(Stmt::Kind::While);
      take();
      expect_punct("(");
      s->value = parse_expr();
      expect_punct(")");
      s->body = parse_block();
      return s;
    }
    if (is_word("for")) {
      auto s = new_stmt(Stmt::Kind::For);
      take();
      expect_punct("(");
      s->init = decl_start() ? parse_decl() : parse_assign_or_call();
      if (s->init->kind == Stmt::Kind::ExprStmt)
        throw ParseError(s->init->loc.line, s->init->column, "for initializer must assign");
      expect_punct(";");
      s->value = parse_expr();
      expect_punct(";");
      s->update = parse_assign_or_call();
      if (s->update->kind != Stmt::Kind::Assign)
        throw ParseError(s->update->loc.line, s->update->column, "for update must assign");
      expect_punct(")");
      s->body = parse_block();
      return s;
    }
    if (is_word("assert")) {
      auto s = new_stmt(Stmt::Kind::Assert);
      take();
      s->value = parse_expr();
      expect_punct(";");
      return s;
    }
    if (is_word("return")) {
      auto s = new_stmt(Stmt::Kind::Return);
      take();
      if (!is_punct(";")) s->value = parse_expr();
      expect_punct(";");
      return s;
    }
    StmtPtr s = decl_start() ? parse_decl() : parse_assign_or_call();
    expect_punct(";");
    return s;
  }

  ExprPtr new_expr(Expr::Kind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  static int precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=") return 3;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 4;
    if (op == "+" || op == "-") return 5;
    if (op == "*" || op == "/" || op == "%") return 6;
    return 0;
  }

  ExprPtr parse_expr(int min_prec = 1) {
    ExprPtr lhs = parse_unary();
    while (peek().kind == TokenKind::Punct) {
      int prec = precedence(peek().text);
      if (prec < min_prec || prec == 0) break;
      const Token& op = take();
      auto bin = new_expr(Expr::Kind::Binary, op);
      bin->op = op.text;
      ExprPtr rhs = parse_expr(prec + 1);
      bin->children.push_back(std::move(lhs));
      bin->children.push_back(std::move(rhs));
      lhs = std::move(bin);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (is_punct("-") || is_punct("!")) {
      const Token& op = take();
      auto e = new_expr(Expr::Kind::Unary, op);
      e->op = op.text;
      e->children.push_back(parse_unary());
      return e;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    for (;;) {
      if (is_punct(".")) {
        const Token& dot = take();
        auto f = new_expr(Expr::Kind::Field, dot);
        f->name = expect_ident("field name");
        f->children.push_back(std::move(e));
        e = std::move(f);
      } else if (is_punct("[")) {
        const Token& br = take();
        auto ix = new_expr(Expr::Kind::Index, br);
        ix->children.push_back(std::move(e));
        ix->children.push_back(parse_expr());
        expect_punct("]");
        e = std::move(ix);
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Int) {
      take();
      auto e = new_expr(Expr::Kind::IntLit, t);
      e->int_value = static_cast<std::int64_t>(t.int_value);
      return e;
    }
    if (t.kind == TokenKind::Float) {
      take();
      auto e = new_expr(Expr::Kind::FloatLit, t);
      e->float_value = t.float_value;
      return e;
    }
    if (is_word("true") || is_word("false")) {
      take();
      auto e = new_expr(Expr::Kind::BoolLit, t);
      e->bool_value = t.text == "true";
      return e;
    }
    if (is_word("null")) {
      take();
      return new_expr(Expr::Kind::NullLit, t);
    }
    if (is_word("new")) {
      take();
      auto e = new_expr(Expr::Kind::NewArray, t);
      Type base = parse_base_type();
      expect_punct("[");
      e->children.push_back(parse_expr());
      expect_punct("]");
      while (is_punct("[") && is_punct("]", 1)) {
        take();
        take();
        base = Type::ArrayOf(base);
      }
      e->declared = base;
      return e;
    }
    if (is_punct("[")) {
      take();
      auto e = new_expr(Expr::Kind::ArrayLit, t);
      if (is_punct("]")) fail("empty array literal; use new T[0]");
      do {
        e->children.push_back(parse_expr());
      } while (is_punct(",") && (take(), true));
      expect_punct("]");
      return e;
    }
    if (is_punct("(")) {
      take();
      ExprPtr e = parse_expr();
      expect_punct(")");
      return e;
    }
    bool conversion = (is_word("int") || is_word("float")) && is_punct("(", 1);
    if (is_plain_ident() || conversion) {
      take();
      if (is_punct("(")) {
        take();
        auto e = new_expr(Expr::Kind::Call, t);
        e->name = t.text;
        if (!is_punct(")")) {
          do {
            e->children.push_back(parse_expr());
          } while (is_punct(",") && (take(), true));
        }
        expect_punct(")");
        return e;
      }
      if (is_punct("{") && record_names_.count(t.text)) {
        take();
        auto e = new_expr(Expr::Kind::RecordLit, t);
        e->name = t.text;
        if (!is_punct("}")) {
          do {
            e->field_names.push_back(expect_ident("field name"));
            expect_punct(":");
            e->children.push_back(parse_expr());
          } while (is_punct(",") && (take(), true));
        }
        expect_punct("}");
        return e;
      }
      auto e = new_expr(Expr::Kind::Var, t);
      e->name = t.text;
      return e;
    }
    fail("expected expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> record_names_;
};

}  // namespace

std::unique_ptr<Program> parse_program(std::string_view source) {
  return Parser(tokenize(source)).parse();
}

}  // namespace whyfail::lang
