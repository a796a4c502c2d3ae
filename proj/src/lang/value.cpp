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

#include "whyfail/lang/value.hpp"

#include <cmath>
#include <charconv>
#include <map>

namespace whyfail::lang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class Copier {
 public:
  Value copy(const Value& v) {
    if (const auto* rec = std::get_if<RecordRef>(&v)) return copy_record(*rec);
    if (const auto* arr = std::get_if<ArrayRef>(&v)) return copy_array(*arr);
    return v;
  }

 private:
  Value copy_record(const RecordRef& rec) {
    if (auto it = records_.find(rec.get()); it != records_.end()) return it->second;
    auto out = std::make_shared<RecordObject>();
    out->def = rec->def;
    out->id = rec->id;
    records_.emplace(rec.get(), out);
    out->fields.reserve(rec->fields.size());
    for (const Value& f : rec->fields) out->fields.push_back(copy(f));
    return out;
  }

  Value copy_array(const ArrayRef& arr) {
    if (auto it = arrays_.find(arr.get()); it != arrays_.end()) return it->second;
    auto out = std::make_shared<ArrayObject>();
    out->element = arr->element;
    out->id = arr->id;
    arrays_.emplace(arr.get(), out);
    out->elements.reserve(arr->elements.size());
    for (const Value& e : arr->elements) out->elements.push_back(copy(e));
    return out;
  }

  std::map<const RecordObject*, RecordRef> records_;
  std::map<const ArrayObject*, ArrayRef> arrays_;
};

}  // namespace

Value default_value(const Type& type) {
  switch (type.kind()) {
    case TypeKind::Int: return std::int64_t{0};
    case TypeKind::Float: return 0.0;
    case TypeKind::Bool: return false;
    case TypeKind::Array: {
      auto arr = std::make_shared<ArrayObject>();
      arr->element = type.element();
      return arr;
    }
    default: return NullValue{};
  }
}

Value deep_copy(const Value& v) { return Copier{}.copy(v); }

std::vector<Value> deep_copy_all(const std::vector<Value>& values) {
  Copier copier;
  std::vector<Value> out;
  out.reserve(values.size());
  for (const Value& v : values) out.push_back(copier.copy(v));
  return out;
}

bool deep_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [](NullValue) { return true; },
          [&](std::int64_t x) { return x == std::get<std::int64_t>(b); },
          [&](double x) {
            double y = std::get<double>(b);
            return x == y || (std::isnan(x) && std::isnan(y));
          },
          [&](bool x) { return x == std::get<bool>(b); },
          [&](const RecordRef& x) {
            const auto& y = std::get<RecordRef>(b);
            if (x->def->name != y->def->name || x->fields.size() != y->fields.size()) return false;
            for (std::size_t i = 0; i < x->fields.size(); ++i)
              if (!deep_equal(x->fields[i], y->fields[i])) return false;
            return true;
          },
          [&](const ArrayRef& x) {
            const auto& y = std::get<ArrayRef>(b);
            if (x->elements.size() != y->elements.size()) return false;
            for (std::size_t i = 0; i < x->elements.size(); ++i)
              if (!deep_equal(x->elements[i], y->elements[i])) return false;
            return true;
          },
      },
      a);
}

bool conforms(const Value& v, const Type& type) {
  return std::visit(overloaded{
                        [&](NullValue) { return type.kind() == TypeKind::Record; },
                        [&](std::int64_t) { return type.kind() == TypeKind::Int; },
                        [&](double) { return type.kind() == TypeKind::Float; },
                        [&](bool) { return type.kind() == TypeKind::Bool; },
                        [&](const RecordRef& r) {
                          if (type.kind() != TypeKind::Record || r->def->name != type.record_name())
                            return false;
                          for (std::size_t i = 0; i < r->fields.size(); ++i)
                            if (!conforms(r->fields[i], r->def->fields[i].type)) return false;
                          return true;
                        },
                        [&](const ArrayRef& a) {
                          if (type.kind() != TypeKind::Array || a->element != type.element())
                            return false;
                          for (const Value& e : a->elements)
                            if (!conforms(e, type.element())) return false;
                          return true;
                        },
                    },
                    v);
}

std::string format_double(double d) {
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_value(const Value& v) {
  return std::visit(overloaded{
                        [](NullValue) -> std::string { return "null"; },
                        [](std::int64_t x) { return std::to_string(x); },
                        [](double x) { return format_double(x); },
                        [](bool x) -> std::string { return x ? "true" : "false"; },
                        [](const RecordRef& r) {
                          std::string out = r->def->name + "{";
                          for (std::size_t i = 0; i < r->fields.size(); ++i) {
                            if (i) out += ", ";
                            out += r->def->fields[i].name + ": " + format_value(r->fields[i]);
                          }
                          return out + "}";
                        },
                        [](const ArrayRef& a) {
                          std::string out = "[";
                          for (std::size_t i = 0; i < a->elements.size(); ++i) {
                            if (i) out += ", ";
                            out += format_value(a->elements[i]);
                          }
                          return out + "]";
                        },
                    },
                    v);
}

}  // namespace whyfail::lang
