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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whyfail::interp {

/// One step of an access path: `.field`, `[3]`, `[$]` (last element) or
/// `[*]` (any element, used when comparing paths up to indices).
struct PathStep {
  enum class Kind { Field, Index, Last, Any };
  Kind kind = Kind::Field;
  std::string field;
  std::size_t index = 0;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct AccessPath {
  std::string root;
  std::vector<PathStep> steps;

  AccessPath() = default;
  explicit AccessPath(std::string r) : root(std::move(r)) {}

  AccessPath field(const std::string& name) const;
  AccessPath index(std::size_t i) const;
  AccessPath last() const;

  /// Number of steps from the root.
  std::size_t level() const { return steps.size(); }
  /// All indices replaced by `[*]`.
  AccessPath abstracted() const;
  std::string str() const;

  friend bool operator==(const AccessPath&, const AccessPath&) = default;
};

/// Parses `root(.field|[n]|[$]|[*])*`; returns nullopt on malformed text.
std::optional<AccessPath> parse_path(std::string_view text);

}  // namespace whyfail::interp
