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

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "whyfail/lang/ast.hpp"
#include "whyfail/lang/type.hpp"

namespace whyfail::lang {

struct RecordObject;
struct ArrayObject;

using RecordRef = std::shared_ptr<RecordObject>;
using ArrayRef = std::shared_ptr<ArrayObject>;

struct NullValue {
  friend bool operator==(NullValue, NullValue) { return true; }
};

/// Runtime value. Records and arrays are heap objects shared by reference.
using Value = std::variant<NullValue, std::int64_t, double, bool, RecordRef, ArrayRef>;

struct RecordObject {
  std::shared_ptr<const RecordDef> def;
  std::vector<Value> fields;
  // Heap identity within one execution; 0 when not yet placed on a heap.
  std::uint64_t id = 0;
};

struct ArrayObject {
  Type element;
  std::vector<Value> elements;
  std::uint64_t id = 0;
};

inline bool is_null(const Value& v) { return std::holds_alternative<NullValue>(v); }

/// Default value of a slot: 0, 0.0, false, null; arrays default to empty.
Value default_value(const Type& type);

/// Recursive copy of a value graph. Heap ids are preserved and sharing within
/// the graph is kept (an object reachable twice is copied once).
Value deep_copy(const Value& v);

/// Copies several values at once so sharing between them is kept.
std::vector<Value> deep_copy_all(const std::vector<Value>& values);

/// Structural equality; heap ids are ignored.
bool deep_equal(const Value& a, const Value& b);

/// Whether `v` can be stored in a slot of `type`.
bool conforms(const Value& v, const Type& type);

/// Literal form, e.g. `Stu{score: 94, ID: 1, newscore: 0.0}` or `[1, 2]`.
/// Floats are printed with round-trip precision and always carry a `.`/`e`.
std::string format_value(const Value& v);
std::string format_double(double d);

}  // namespace whyfail::lang
