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

#include "whyfail/interp/point.hpp"

namespace whyfail::interp {

const char* position_name(Position p) { return p == Position::Before ? "Before" : "After"; }

std::string describe(const lang::TypedProgram& program, const ObservationPoint& point) {
  return std::string(position_name(point.position)) + " line " +
         std::to_string(program.statement(point.ordinal).loc.line);
}

}  // namespace whyfail::interp
