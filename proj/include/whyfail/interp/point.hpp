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

#include <compare>
#include <cstddef>
#include <string>

#include "whyfail/lang/typecheck.hpp"

namespace whyfail::interp {

enum class Position { Before, After };

/// A program position just before or just after a statement.
struct ObservationPoint {
  std::size_t ordinal = 0;
  Position position = Position::Before;

  friend auto operator<=>(const ObservationPoint&, const ObservationPoint&) = default;
};

const char* position_name(Position p);

/// "Before line 23" using the statement's source line.
std::string describe(const lang::TypedProgram& program, const ObservationPoint& point);

}  // namespace whyfail::interp
