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

#include "whyfail/interp/path.hpp"

#include <cctype>

namespace whyfail::interp {

AccessPath AccessPath::field(const std::string& name) const {
  AccessPath p = *this;
  p.steps.push_back(PathStep{PathStep::Kind::Field, name, 0});
  return p;
}

AccessPath AccessPath::index(std::size_t i) const {
  AccessPath p = *this;
  p.steps.push_back(PathStep{PathStep::Kind::Index, {}, i});
  return p;
}

AccessPath AccessPath::last() const {
  AccessPath p = *this;
  p.steps.push_back(PathStep{PathStep::Kind::Last, {}, 0});
  return p;
}

AccessPath AccessPath::abstracted() const {
  AccessPath p = *this;
  for (auto& s : p.steps)
    if (s.kind != PathStep::Kind::Field) s = PathStep{PathStep::Kind::Any, {}, 0};
  return p;
}

std::string AccessPath::str() const {
  std::string out = root;
  for (const auto& s : steps) {
    switch (s.kind) {
      case PathStep::Kind::Field: out += "." + s.field; break;
      case PathStep::Kind::Index: out += "[" + std::to_string(s.index) + "]"; break;
      case PathStep::Kind::Last: out += "[$]"; break;
      case PathStep::Kind::Any: out += "[*]"; break;
    }
  }
  return out;
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

}  // namespace

std::optional<AccessPath> parse_path(std::string_view text) {
  std::size_t i = 0;
  auto ident = [&]() -> std::optional<std::string> {
    std::size_t start = i;
    while (i < text.size() && ident_char(text[i])) ++i;
    if (i == start) return std::nullopt;
    return std::string(text.substr(start, i - start));
  };
  auto root = ident();
  if (!root) return std::nullopt;
  AccessPath path(*root);
  while (i < text.size()) {
    if (text[i] == '.') {
      ++i;
      auto name = ident();
      if (!name) return std::nullopt;
      path = path.field(*name);
    } else if (text[i] == '[') {
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) return std::nullopt;
      std::string_view inner = text.substr(i + 1, close - i - 1);
      i = close + 1;
      if (inner == "$") {
        path = path.last();
      } else if (inner == "*") {
        path.steps.push_back(PathStep{PathStep::Kind::Any, {}, 0});
      } else {
        if (inner.empty()) return std::nullopt;
        std::size_t n = 0;
        for (char c : inner) {
          if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
          n = n * 10 + static_cast<std::size_t>(c - '0');
        }
        path = path.index(n);
      }
    } else {
      return std::nullopt;
    }
  }
  return path;
}

}  // namespace whyfail::interp
