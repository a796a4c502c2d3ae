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
#include <set>
#include <string>
#include <vector>

#include "whyfail/interp/interpreter.hpp"
#include "whyfail/interp/trace.hpp"

namespace whyfail::interp {

/// For every event and every use, the event holding the reaching definition
/// (the last def of the cell, else the allocation of its heap object), or
/// nullopt when the value comes from the test input.
using ReachingDefs = std::vector<std::vector<std::optional<std::size_t>>>;

ReachingDefs reaching_definitions(const Trace& trace);

struct Slice {
  std::set<std::size_t> statements;
  // Per trace event: part of the backward closure.
  std::vector<bool> events;
};

/// Backward closure from `criterion` over data and control dependences.
Slice dynamic_slice(const Trace& trace, std::size_t criterion);

/// Variables of `state` whose value at the point flows into a slice event
/// executed after it.
std::set<std::string> relevant_variables_at(const Trace& trace, const Slice& slice,
                                            const ProgramState& state);

}  // namespace whyfail::interp
