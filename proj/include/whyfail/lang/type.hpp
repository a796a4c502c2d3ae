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
#include <string>

namespace whyfail::lang {

enum class TypeKind { Int, Float, Bool, Void, Null, Record, Array };

/// A MiniLang static type. Records are named; arrays carry their element type.
class Type {
 public:
  Type() = default;

  static Type Int() { return Type(TypeKind::Int); }
  static Type Float() { return Type(TypeKind::Float); }
  static Type Bool() { return Type(TypeKind::Bool); }
  static Type Void() { return Type(TypeKind::Void); }
  static Type Null() { return Type(TypeKind::Null); }
  static Type Record(std::string name);
  static Type ArrayOf(const Type& element);

  TypeKind kind() const { return kind_; }
  const std::string& record_name() const { return name_; }
  const Type& element() const { return *element_; }

  bool is_numeric() const { return kind_ == TypeKind::Int || kind_ == TypeKind::Float; }
  bool is_reference() const { return kind_ == TypeKind::Record || kind_ == TypeKind::Array; }

  // Whether a value of type `from` may be stored in a slot of this type
  // (identity, int-to-float widening, null into records).
  bool accepts(const Type& from) const;

  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  explicit Type(TypeKind kind) : kind_(kind) {}

  TypeKind kind_ = TypeKind::Void;
  std::string name_;
  std::shared_ptr<const Type> element_;
};

}  // namespace whyfail::lang
