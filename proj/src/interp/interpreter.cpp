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

#include "whyfail/interp/interpreter.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "big_stack.hpp"

namespace whyfail::interp {

using lang::ArrayObject;
using lang::ArrayRef;
using lang::Builtin;
using lang::Expr;
using lang::FunctionDef;
using lang::NullValue;
using lang::RecordObject;
using lang::RecordRef;
using lang::Stmt;
using lang::Type;
using lang::TypeKind;
using lang::Value;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Irrelevant: return "Irrelevant";
  }
  return "?";
}

const lang::Value* ProgramState::find(const std::string& name) const {
  for (const auto& [n, v] : bindings)
    if (n == name) return &v;
  return nullptr;
}

namespace {

struct Fault {
  std::string message;
  bool recorded = false;
};
struct AssertionFailed {};
struct BudgetExceeded {};

struct Local {
  std::string name;
  Type type;
  Value value;
};

struct Frame {
  std::uint64_t id = 0;
  const FunctionDef* fn = nullptr;
  std::vector<Local> locals;

  Local* find(const std::string& name) {
    for (auto it = locals.rbegin(); it != locals.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }
};

// Result of evaluating an expression, plus where the value was read from.
struct Eval {
  Value value;
  std::string path;
  std::string root;
  std::uint64_t frame = 0;
};

// Storage target of an assignment.
struct Slot {
  enum class Kind { Local, Field, Element } kind = Kind::Local;
  std::string name;
  RecordRef record;
  ArrayRef array;
  std::size_t index = 0;
  Type type;
  Access access;
};

// The event of the statement currently being executed.
struct OpenEvent {
  lang::LocationId loc;
  std::optional<std::size_t> control_parent;
  std::uint64_t frame = 0;
  bool is_condition = false;
  // A call was made; this is the continuation after the callee returned.
  std::optional<std::size_t> after_call;
};

std::int64_t wrap(std::uint64_t v) { return static_cast<std::int64_t>(v); }
std::uint64_t bits(std::int64_t v) { return static_cast<std::uint64_t>(v); }

double as_double(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

Value coerce(Value v, const Type& to) {
  if (to.kind() == TypeKind::Float)
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return v;
}

std::string heap_cell(std::uint64_t id, const std::string& suffix) {
  return "h" + std::to_string(id) + suffix;
}

class Interpreter {
 public:
  Interpreter(const lang::TypedProgram& program, const ExecOptions& options, RunResult& result)
      : program_(program), options_(options), result_(result) {
    result_.first_entry.assign(program.statement_count(), std::nullopt);
    result_.first_exit.assign(program.statement_count(), std::nullopt);
    track_points_ = options.overlay != nullptr || !options.capture_at.empty();
  }

  void run(const std::vector<Value>& args) {
    const FunctionDef& entry = program_.program().entry();
    Frame frame;
    frame.id = ++next_frame_;
    frame.fn = &entry;
    std::vector<Value> imported = import_args(args);
    for (std::size_t i = 0; i < entry.params.size(); ++i)
      frame.locals.push_back(Local{entry.params[i].name, entry.params[i].type, imported[i]});
    frames_.push_back(std::move(frame));

    try {
      exec_list(entry.body);
      if (assertion_passed_) {
        result_.verdict = Verdict::Pass;
      } else {
        result_.verdict = Verdict::Irrelevant;
        result_.diagnostic = "designated assertion not reached";
      }
    } catch (const AssertionFailed&) {
      result_.verdict = Verdict::Fail;
    } catch (const Fault& f) {
      result_.verdict = Verdict::Irrelevant;
      result_.diagnostic = f.message;
    } catch (const BudgetExceeded&) {
      result_.verdict = Verdict::Irrelevant;
      result_.budget_exceeded = true;
      result_.diagnostic = "step budget exceeded";
    }
    result_.steps = steps_;
  }

 private:
  Frame& frame() { return frames_.back(); }

  // ---- heap

  std::vector<Value> import_args(const std::vector<Value>& args) {
    std::map<const void*, Value> memo;
    std::vector<Value> out;
    for (const Value& a : args) out.push_back(import(a, memo));
    return out;
  }

  Value import(const Value& v, std::map<const void*, Value>& memo) {
    if (const auto* r = std::get_if<RecordRef>(&v)) {
      if (auto it = memo.find(r->get()); it != memo.end()) return it->second;
      auto copy = std::make_shared<RecordObject>();
      copy->def = (*r)->def;
      copy->id = ++next_heap_;
      memo.emplace(r->get(), copy);
      for (const Value& f : (*r)->fields) copy->fields.push_back(import(f, memo));
      return copy;
    }
    if (const auto* a = std::get_if<ArrayRef>(&v)) {
      if (auto it = memo.find(a->get()); it != memo.end()) return it->second;
      auto copy = std::make_shared<ArrayObject>();
      copy->element = (*a)->element;
      copy->id = ++next_heap_;
      memo.emplace(a->get(), copy);
      for (const Value& e : (*a)->elements) copy->elements.push_back(import(e, memo));
      return copy;
    }
    return v;
  }

  ArrayRef new_array(const Type& element, std::size_t n) {
    auto arr = std::make_shared<ArrayObject>();
    arr->element = element;
    arr->id = ++next_heap_;
    cur_.created.push_back(arr->id);
    arr->elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (element.kind() == TypeKind::Array)
        arr->elements.push_back(new_array(element.element(), 0));
      else
        arr->elements.push_back(lang::default_value(element));
    }
    return arr;
  }

  // ---- events

  void begin_event(const lang::LocationId& loc, bool is_condition) {
    open_ = OpenEvent{loc, control_, frame().id, is_condition, std::nullopt};
    reset_current();
  }

  void reset_current() {
    cur_ = TraceEvent{};
    cur_.location = open_.loc;
    cur_.control_parent = open_.control_parent;
    cur_.frame = open_.frame;
    cur_.is_condition = open_.is_condition;
  }

  std::size_t append(TraceEvent&& event) {
    if (++steps_ > options_.step_budget) throw BudgetExceeded{};
    const std::size_t ordinal = event.location.ordinal;
    event.visit = visits_[ordinal]++;
    if (!event.raised) result_.coverage.insert(ordinal);
    const std::size_t index = event_count_++;
    if (options_.record_trace) result_.trace.push_back(std::move(event));
    return index;
  }

  // Closes the open event; returns the index of the statement's last event.
  std::size_t finish_event() {
    if (open_.after_call && cur_.defs.empty() && cur_.uses.empty() && cur_.created.empty())
      return *open_.after_call;
    return append(std::move(cur_));
  }

  // Records the open event as the one that raised `fault`, once.
  void record_fault(Fault& fault) {
    if (fault.recorded) return;
    fault.recorded = true;
    cur_.raised = true;
    append(std::move(cur_));
  }

  static void add_access(std::vector<Access>& list, Access a) {
    for (const Access& x : list)
      if (x.cell == a.cell) return;
    list.push_back(std::move(a));
  }
  void use(Access a) { add_access(cur_.uses, std::move(a)); }
  void def(Access a) { add_access(cur_.defs, std::move(a)); }

  Access local_access(const std::string& name) {
    return Access{"f" + std::to_string(frame().id) + ":" + name, name, name, frame().id, 0};
  }

  static Access heap_access(const Eval& base, std::uint64_t object, const std::string& suffix) {
    return Access{heap_cell(object, suffix), (base.path.empty() ? "?" : base.path) + suffix,
                  base.root, base.frame, object};
  }

  // ---- observation points

  void visit_point(std::size_t ordinal, Position position) {
    const ObservationPoint point{ordinal, position};
    if (options_.overlay && !overlay_applied_ && options_.overlay->point == point) {
      overlay_applied_ = true;
      for (const Assignment& a : options_.overlay->assignments) apply(a);
    }
    if (options_.capture_at.count(point) && !result_.captures.count(point)) {
      ProgramState state;
      state.point = point;
      state.trace_position = event_count_;
      state.frame = frame().id;
      std::vector<Value> values;
      for (const Local& l : frame().locals) values.push_back(l.value);
      values = lang::deep_copy_all(values);
      for (std::size_t i = 0; i < values.size(); ++i)
        state.bindings.emplace_back(frame().locals[i].name, std::move(values[i]));
      result_.captures.emplace(point, std::move(state));
    }
  }

  // Overlay assignment; silently skipped when the path does not resolve.
  void apply(const Assignment& a) {
    Local* local = frame().find(a.path.root);
    if (!local) return;
    const auto& steps = a.path.steps;
    std::size_t n = steps.size();
    bool to_null = false;
    if (n > 0 && steps.back().kind == PathStep::Kind::Field) {
      if (steps.back().field == "length") return;
      if (steps.back().field == "isNull") {
        const double flag = std::holds_alternative<bool>(a.value)
                                ? (std::get<bool>(a.value) ? 1.0 : 0.0)
                                : as_number(a.value);
        if (flag == 0.0) return;
        to_null = true;
        --n;
      }
    }

    Value* slot = &local->value;
    Type type = local->type;
    for (std::size_t i = 0; i < n; ++i) {
      const PathStep& s = steps[i];
      if (s.kind == PathStep::Kind::Field) {
        auto* rec = std::get_if<RecordRef>(slot);
        if (!rec) return;
        int idx = (*rec)->def->field_index(s.field);
        if (idx < 0) return;
        type = (*rec)->def->fields[idx].type;
        slot = &(*rec)->fields[idx];
      } else {
        auto* arr = std::get_if<ArrayRef>(slot);
        if (!arr || (*arr)->elements.empty() || s.kind == PathStep::Kind::Any) return;
        std::size_t idx = s.kind == PathStep::Kind::Last ? (*arr)->elements.size() - 1 : s.index;
        if (idx >= (*arr)->elements.size()) return;
        type = (*arr)->element;
        slot = &(*arr)->elements[idx];
      }
    }
    if (to_null) {
      if (type.kind() == TypeKind::Record) *slot = NullValue{};
      return;
    }
    if (auto v = convert(a.value, type)) *slot = std::move(*v);
  }

  static double as_number(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* b = std::get_if<bool>(&v)) return *b ? 1.0 : 0.0;
    return std::numeric_limits<double>::quiet_NaN();
  }

  static std::optional<Value> convert(const Value& v, const Type& type) {
    switch (type.kind()) {
      case TypeKind::Float:
        if (std::holds_alternative<double>(v) || std::holds_alternative<std::int64_t>(v))
          return as_number(v);
        return std::nullopt;
      case TypeKind::Int: {
        if (std::holds_alternative<std::int64_t>(v)) return v;
        double d = as_number(v);
        if (!std::isfinite(d) || d != std::floor(d) || d < -9.2233720368547758e18 ||
            d >= 9.2233720368547758e18)
          return std::nullopt;
        return static_cast<std::int64_t>(d);
      }
      case TypeKind::Bool: {
        if (std::holds_alternative<bool>(v)) return v;
        double d = as_number(v);
        if (d == 0.0) return false;
        if (d == 1.0) return true;
        return std::nullopt;
      }
      default:
        if (lang::conforms(v, type)) return v;
        return std::nullopt;
    }
  }

  // ---- statements

  void exec_list(const std::vector<lang::StmtPtr>& list) {
    const std::size_t mark = frame().locals.size();
    for (const auto& s : list) {
      exec_stmt(*s);
      if (returning_) break;
    }
    frame().locals.resize(mark);
  }

  void exec_stmt(const Stmt& s) {
    const std::size_t ordinal = s.loc.ordinal;
    if (!result_.first_entry[ordinal]) result_.first_entry[ordinal] = event_count_;
    if (track_points_) visit_point(ordinal, Position::Before);

    switch (s.kind) {
      case Stmt::Kind::If: exec_if(s); break;
      case Stmt::Kind::While: exec_while(s); break;
      case Stmt::Kind::For: exec_for(s); break;
      case Stmt::Kind::Assert: exec_assert(s); break;
      default: exec_simple(s); break;
    }
    if (returning_) return;
    if (!result_.first_exit[ordinal]) result_.first_exit[ordinal] = event_count_;
    if (track_points_) visit_point(ordinal, Position::After);
  }

  // Runs one event for a simple statement (or a for init/update).
  std::size_t exec_simple(const Stmt& s) {
    begin_event(s.loc, false);
    try {
      do_simple(s);
    } catch (Fault& f) {
      record_fault(f);
      throw;
    }
    return finish_event();
  }

  void do_simple(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::VarDecl: {
        Value v = coerce(eval(*s.value).value, s.decl_type);
        frame().locals.push_back(Local{s.name, s.decl_type, std::move(v)});
        def(local_access(s.name));
        return;
      }
      case Stmt::Kind::Assign: {
        Slot slot = resolve_slot(*s.target);
        Value v = coerce(eval(*s.value).value, slot.type);
        store(slot, std::move(v));
        return;
      }
      case Stmt::Kind::ExprStmt: eval(*s.value); return;
      case Stmt::Kind::Return: {
        if (s.value) return_value_ = coerce(eval(*s.value).value, frame().fn->return_type);
        def(local_access("$ret"));
        returning_ = true;
        return;
      }
      default: throw Fault{"unexpected statement"};
    }
  }

  void exec_assert(const Stmt& s) {
    begin_event(s.loc, false);
    bool ok = false;
    try {
      ok = std::get<bool>(eval(*s.value).value);
    } catch (Fault& f) {
      record_fault(f);
      throw;
    }
    const bool designated = program_.designated_assertion() == s.loc.ordinal;
    if (!ok && !designated) {
      Fault f{"assertion failed at line " + std::to_string(s.loc.line)};
      record_fault(f);
      throw f;
    }
    std::size_t index = finish_event();
    if (!designated) return;
    result_.assertion_event = index;
    if (!ok) throw AssertionFailed{};
    assertion_passed_ = true;
  }

  std::size_t eval_condition(const Stmt& s, std::optional<std::size_t> parent, bool& value) {
    auto saved = control_;
    control_ = parent;
    begin_event(s.loc, true);
    control_ = saved;
    try {
      value = std::get<bool>(eval(*s.value).value);
    } catch (Fault& f) {
      record_fault(f);
      throw;
    }
    return finish_event();
  }

  void exec_if(const Stmt& s) {
    bool cond = false;
    std::size_t index = eval_condition(s, control_, cond);
    auto saved = control_;
    control_ = index;
    exec_list(cond ? s.body : s.else_body);
    control_ = saved;
  }

  void exec_while(const Stmt& s) {
    const auto outer = control_;
    std::optional<std::size_t> parent = outer;
    for (;;) {
      bool cond = false;
      std::size_t index = eval_condition(s, parent, cond);
      if (!cond) break;
      control_ = index;
      exec_list(s.body);
      control_ = outer;
      if (returning_) return;
      parent = index;
    }
  }

  void exec_for(const Stmt& s) {
    const auto outer = control_;
    const std::size_t mark = frame().locals.size();
    exec_simple(*s.init);
    std::optional<std::size_t> parent = outer;
    for (;;) {
      bool cond = false;
      std::size_t index = eval_condition(s, parent, cond);
      if (!cond) break;
      control_ = index;
      exec_list(s.body);
      if (returning_) {
        control_ = outer;
        frame().locals.resize(mark);
        return;
      }
      exec_simple(*s.update);
      control_ = outer;
      parent = index;
    }
    frame().locals.resize(mark);
  }

  // ---- assignment targets

  Slot resolve_slot(const Expr& target) {
    Slot slot;
    slot.type = target.type;
    switch (target.kind) {
      case Expr::Kind::Var:
        slot.kind = Slot::Kind::Local;
        slot.name = target.name;
        slot.access = local_access(target.name);
        return slot;
      case Expr::Kind::Field: {
        Eval base = eval(*target.children[0]);
        if (lang::is_null(base.value))
          throw Fault{"null dereference of '" + describe_path(base) + "' at line " +
                      std::to_string(open_.loc.line)};
        slot.kind = Slot::Kind::Field;
        slot.record = std::get<RecordRef>(base.value);
        slot.index = static_cast<std::size_t>(target.field_index);
        slot.access = heap_access(base, slot.record->id, "." + target.name);
        return slot;
      }
      case Expr::Kind::Index: {
        Eval base = eval(*target.children[0]);
        std::int64_t i = std::get<std::int64_t>(eval(*target.children[1]).value);
        slot.kind = Slot::Kind::Element;
        slot.array = std::get<ArrayRef>(base.value);
        slot.index = check_index(slot.array, i, base);
        slot.access = heap_access(base, slot.array->id, "[" + std::to_string(slot.index) + "]");
        return slot;
      }
      default: throw Fault{"invalid assignment target"};
    }
  }

  void store(const Slot& slot, Value v) {
    switch (slot.kind) {
      case Slot::Kind::Local: frame().find(slot.name)->value = std::move(v); break;
      case Slot::Kind::Field: slot.record->fields[slot.index] = std::move(v); break;
      case Slot::Kind::Element: slot.array->elements[slot.index] = std::move(v); break;
    }
    def(slot.access);
  }

  std::size_t check_index(const ArrayRef& arr, std::int64_t i, const Eval& base) {
    if (i < 0 || static_cast<std::uint64_t>(i) >= arr->elements.size())
      throw Fault{"index " + std::to_string(i) + " out of bounds for '" + describe_path(base) +
                  "' of length " + std::to_string(arr->elements.size()) + " at line " +
                  std::to_string(open_.loc.line)};
    return static_cast<std::size_t>(i);
  }

  static std::string describe_path(const Eval& e) { return e.path.empty() ? "<expr>" : e.path; }

  // ---- expressions

  Eval eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLit: return Eval{e.int_value, {}, {}, 0};
      case Expr::Kind::FloatLit: return Eval{e.float_value, {}, {}, 0};
      case Expr::Kind::BoolLit: return Eval{e.bool_value, {}, {}, 0};
      case Expr::Kind::NullLit: return Eval{NullValue{}, {}, {}, 0};
      case Expr::Kind::Var: {
        Local* l = frame().find(e.name);
        use(local_access(e.name));
        return Eval{l->value, e.name, e.name, frame().id};
      }
      case Expr::Kind::Field: {
        Eval base = eval(*e.children[0]);
        if (lang::is_null(base.value))
          throw Fault{"null dereference of '" + describe_path(base) + "' at line " +
                      std::to_string(open_.loc.line)};
        const auto& rec = std::get<RecordRef>(base.value);
        Access a = heap_access(base, rec->id, "." + e.name);
        use(a);
        return Eval{rec->fields[static_cast<std::size_t>(e.field_index)], a.path, base.root,
                    base.frame};
      }
      case Expr::Kind::Index: {
        Eval base = eval(*e.children[0]);
        std::int64_t i = std::get<std::int64_t>(eval(*e.children[1]).value);
        const auto& arr = std::get<ArrayRef>(base.value);
        std::size_t idx = check_index(arr, i, base);
        Access a = heap_access(base, arr->id, "[" + std::to_string(idx) + "]");
        use(a);
        return Eval{arr->elements[idx], a.path, base.root, base.frame};
      }
      case Expr::Kind::Unary: {
        Value v = eval(*e.children[0]).value;
        if (e.op == "!") return Eval{!std::get<bool>(v), {}, {}, 0};
        if (const auto* i = std::get_if<std::int64_t>(&v)) return Eval{wrap(0 - bits(*i)), {}, {}, 0};
        return Eval{-std::get<double>(v), {}, {}, 0};
      }
      case Expr::Kind::Binary: return Eval{binary(e), {}, {}, 0};
      case Expr::Kind::Call: return call(e);
      case Expr::Kind::NewArray: {
        std::int64_t n = std::get<std::int64_t>(eval(*e.children[0]).value);
        if (n < 0)
          throw Fault{"negative array size " + std::to_string(n) + " at line " +
                      std::to_string(open_.loc.line)};
        if (n > 100'000'000) throw Fault{"array size " + std::to_string(n) + " too large"};
        return Eval{new_array(e.declared, static_cast<std::size_t>(n)), {}, {}, 0};
      }
      case Expr::Kind::ArrayLit: {
        const Type& element = e.type.element();
        std::vector<Value> values;
        for (const auto& c : e.children) values.push_back(coerce(eval(*c).value, element));
        auto arr = std::make_shared<ArrayObject>();
        arr->element = element;
        arr->id = ++next_heap_;
        arr->elements = std::move(values);
        cur_.created.push_back(arr->id);
        return Eval{arr, {}, {}, 0};
      }
      case Expr::Kind::RecordLit: {
        auto def = program_.program().find_record(e.name);
        std::vector<Value> fields;
        for (const auto& f : def->fields) fields.push_back(lang::default_value(f.type));
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          auto slot = static_cast<std::size_t>(e.literal_slots[i]);
          fields[slot] = coerce(eval(*e.children[i]).value, def->fields[slot].type);
        }
        auto rec = std::make_shared<RecordObject>();
        rec->def = def;
        rec->id = ++next_heap_;
        rec->fields = std::move(fields);
        cur_.created.push_back(rec->id);
        // Default-valued array fields are fresh objects too.
        for (auto& f : rec->fields)
          if (auto* a = std::get_if<ArrayRef>(&f); a && (*a)->id == 0) {
            (*a)->id = ++next_heap_;
            cur_.created.push_back((*a)->id);
          }
        return Eval{rec, {}, {}, 0};
      }
    }
    throw Fault{"unknown expression"};
  }

  Value binary(const Expr& e) {
    const std::string& op = e.op;
    if (op == "&&" || op == "||") {
      bool a = std::get<bool>(eval(*e.children[0]).value);
      if (op == "&&" && !a) return false;
      if (op == "||" && a) return true;
      return std::get<bool>(eval(*e.children[1]).value);
    }
    Value a = eval(*e.children[0]).value;
    Value b = eval(*e.children[1]).value;

    if (op == "==" || op == "!=") {
      bool eq = equal(a, b);
      return op == "==" ? eq : !eq;
    }
    const bool ints = std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b);
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      bool r;
      if (ints) {
        auto x = std::get<std::int64_t>(a), y = std::get<std::int64_t>(b);
        r = op == "<" ? x < y : op == "<=" ? x <= y : op == ">" ? x > y : x >= y;
      } else {
        double x = as_double(a), y = as_double(b);
        r = op == "<" ? x < y : op == "<=" ? x <= y : op == ">" ? x > y : x >= y;
      }
      return r;
    }
    if (ints) {
      auto x = std::get<std::int64_t>(a), y = std::get<std::int64_t>(b);
      if (op == "+") return wrap(bits(x) + bits(y));
      if (op == "-") return wrap(bits(x) - bits(y));
      if (op == "*") return wrap(bits(x) * bits(y));
      if (y == 0)
        throw Fault{"division by zero at line " + std::to_string(open_.loc.line)};
      if (x == std::numeric_limits<std::int64_t>::min() && y == -1)
        return op == "/" ? x : std::int64_t{0};
      return op == "/" ? x / y : x % y;
    }
    double x = as_double(a), y = as_double(b);
    if (op == "+") return x + y;
    if (op == "-") return x - y;
    if (op == "*") return x * y;
    return x / y;
  }

  static bool equal(const Value& a, const Value& b) {
    const bool a_num = std::holds_alternative<std::int64_t>(a) || std::holds_alternative<double>(a);
    const bool b_num = std::holds_alternative<std::int64_t>(b) || std::holds_alternative<double>(b);
    if (a_num && b_num) {
      if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b))
        return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
      return as_double(a) == as_double(b);
    }
    if (std::holds_alternative<bool>(a) && std::holds_alternative<bool>(b))
      return std::get<bool>(a) == std::get<bool>(b);
    const void* pa = nullptr;
    const void* pb = nullptr;
    if (const auto* r = std::get_if<RecordRef>(&a)) pa = r->get();
    if (const auto* r = std::get_if<ArrayRef>(&a)) pa = r->get();
    if (const auto* r = std::get_if<RecordRef>(&b)) pb = r->get();
    if (const auto* r = std::get_if<ArrayRef>(&b)) pb = r->get();
    return pa == pb;
  }

  Eval call(const Expr& e) {
    if (e.builtin != Builtin::None) return Eval{builtin(e), {}, {}, 0};

    const FunctionDef& fn = *e.callee;
    std::vector<Value> args;
    for (std::size_t i = 0; i < e.children.size(); ++i)
      args.push_back(coerce(eval(*e.children[i]).value, fn.params[i].type));
    if (frames_.size() >= options_.max_depth)
      throw Fault{"call depth limit of " + std::to_string(options_.max_depth) + " exceeded"};

    Frame callee;
    callee.id = ++next_frame_;
    callee.fn = &fn;
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      cur_.defs.push_back(Access{"f" + std::to_string(callee.id) + ":" + fn.params[i].name,
                                 fn.params[i].name, fn.params[i].name, callee.id, 0});
      callee.locals.push_back(Local{fn.params[i].name, fn.params[i].type, std::move(args[i])});
    }

    // Flush the call-site event as the parameter-binding event.
    OpenEvent site = open_;
    std::size_t bind = append(std::move(cur_));
    const std::uint64_t callee_id = callee.id;
    frames_.push_back(std::move(callee));
    auto saved_control = control_;
    control_ = site.control_parent;
    exec_list(fn.body);
    control_ = saved_control;
    frames_.pop_back();

    if (!returning_ && fn.return_type.kind() != TypeKind::Void) {
      Fault f{"function '" + fn.name + "' ended without returning a value"};
      f.recorded = true;
      throw f;
    }
    returning_ = false;
    Value result = std::move(return_value_);
    return_value_ = NullValue{};

    open_ = site;
    open_.after_call = bind;
    reset_current();
    if (fn.return_type.kind() != TypeKind::Void)
      use(Access{"f" + std::to_string(callee_id) + ":$ret", "$ret", "$ret", callee_id, 0});
    return Eval{result, {}, {}, 0};
  }

  Value builtin(const Expr& e) {
    if (e.builtin == Builtin::Len) {
      Eval base = eval(*e.children[0]);
      const auto& arr = std::get<ArrayRef>(base.value);
      use(heap_access(base, arr->id, ".length"));
      return static_cast<std::int64_t>(arr->elements.size());
    }
    Value v = eval(*e.children[0]).value;
    switch (e.builtin) {
      case Builtin::Abs:
        if (const auto* i = std::get_if<std::int64_t>(&v))
          return *i < 0 ? wrap(0 - bits(*i)) : *i;
        return std::fabs(std::get<double>(v));
      case Builtin::Sqrt: return std::sqrt(as_double(v));
      case Builtin::Floor: return std::floor(as_double(v));
      case Builtin::Ceil: return std::ceil(as_double(v));
      case Builtin::ToFloat: return as_double(v);
      case Builtin::ToInt: {
        if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
        double d = std::trunc(std::get<double>(v));
        if (!std::isfinite(d) || d < -9.2233720368547758e18 || d >= 9.2233720368547758e18)
          throw Fault{"int() of out-of-range value " + lang::format_double(std::get<double>(v)) +
                      " at line " + std::to_string(open_.loc.line)};
        return static_cast<std::int64_t>(d);
      }
      default: throw Fault{"unknown builtin"};
    }
  }

  const lang::TypedProgram& program_;
  const ExecOptions& options_;
  RunResult& result_;
  bool track_points_ = false;

  std::vector<Frame> frames_;
  std::uint64_t next_frame_ = 0;
  std::uint64_t next_heap_ = 0;

  OpenEvent open_;
  TraceEvent cur_;
  std::optional<std::size_t> control_;
  std::map<std::size_t, std::size_t> visits_;
  std::size_t event_count_ = 0;
  std::size_t steps_ = 0;

  bool returning_ = false;
  Value return_value_;
  bool assertion_passed_ = false;
  bool overlay_applied_ = false;
};

}  // namespace

RunResult execute(const lang::TypedProgram& program, const TestCase& test,
                  const ExecOptions& options) {
  const FunctionDef& entry = program.program().entry();
  if (test.args.size() != entry.params.size())
    throw ArgumentError("test " + std::to_string(test.id) + ": entry function '" + entry.name +
                        "' expects " + std::to_string(entry.params.size()) + " arguments, got " +
                        std::to_string(test.args.size()));
  std::vector<Value> args;
  for (std::size_t i = 0; i < test.args.size(); ++i) {
    Value v = coerce(test.args[i], entry.params[i].type);
    if (!lang::conforms(v, entry.params[i].type))
      throw ArgumentError("test " + std::to_string(test.id) + ": argument " + std::to_string(i + 1) +
                          " does not conform to " + entry.params[i].type.str());
    args.push_back(std::move(v));
  }

  RunResult result;
  detail::run_with_big_stack([&] {
    Interpreter interp(program, options, result);
    interp.run(args);
  });
  return result;
}

}  // namespace whyfail::interp
