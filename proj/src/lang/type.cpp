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

#include "whyfail/lang/type.hpp"

namespace whyfail::lang {

Type Type::Record(std::string name) {
  Type t(TypeKind::Record);
  t.name_ = std::move(name);
  return t;
}

Type Type::ArrayOf(const Type& element) {
  Type t(TypeKind::Array);
  t.element_ = std::make_shared<const Type>(element);
  return t;
}

bool Type::accepts(const Type& from) const {
  if (*this == from) return true;
  if (kind_ == TypeKind::Float && from.kind_ == TypeKind::Int) return true;
  if (kind_ == TypeKind::Record && from.kind_ == TypeKind::Null) return true;
  return false;
}

std::string Type::str() const {
  switch (kind_) {
    case TypeKind::Int: return "int";
    case TypeKind::Float: return "float";
    case TypeKind::Bool: return "bool";
    case TypeKind::Void: return "void";
    case TypeKind::Null: return "null";
    case TypeKind::Record: return name_;
    case TypeKind::Array: return element_->str() + "[]";
  }
  return "?";
}

bool operator==(const Type& a, const Type& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == TypeKind::Record) return a.name_ == b.name_;
  if (a.kind_ == TypeKind::Array) return *a.element_ == *b.element_;
  return true;
}

}  // namespace whyfail::lang
