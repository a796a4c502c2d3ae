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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "whyfail/interp/path.hpp"
#include "whyfail/interp/point.hpp"
#include "whyfail/interp/trace.hpp"
#include "whyfail/lang/typecheck.hpp"
#include "whyfail/lang/value.hpp"

namespace whyfail::interp {

enum class Provenance { Given, Generated };

struct TestCase {
  std::size_t id = 0;
  std::vector<lang::Value> args;
  Provenance provenance = Provenance::Given;
  // Generator state the test was drawn from (generated tests only).
  std::uint64_t seed = 0;
};

enum class Verdict { Pass, Fail, Irrelevant };

const char* verdict_name(Verdict v);

/// Snapshot of the variables in scope at an observation point.
struct ProgramState {
  ObservationPoint point;
  // Declaration order; values are deep copies that keep heap ids.
  std::vector<std::pair<std::string, lang::Value>> bindings;
  // Number of trace events recorded before the point was reached.
  std::size_t trace_position = 0;
  std::uint64_t frame = 0;

  const lang::Value* find(const std::string& name) const;
};

struct Assignment {
  AccessPath path;
  lang::Value value;
};

struct MutationOverlay {
  ObservationPoint point;
  std::vector<Assignment> assignments;
};

struct RunResult {
  Verdict verdict = Verdict::Irrelevant;
  Trace trace;
  // Ordinals of statements with at least one normally completed event.
  std::set<std::size_t> coverage;
  std::map<ObservationPoint, ProgramState> captures;
  // Event that decided the verdict (the failing or last passing evaluation).
  std::optional<std::size_t> assertion_event;
  // Trace position when each statement was first entered / first completed.
  std::vector<std::optional<std::size_t>> first_entry;
  std::vector<std::optional<std::size_t>> first_exit;
  bool budget_exceeded = false;
  // Fault message for Irrelevant runs.
  std::string diagnostic;
  std::size_t steps = 0;
};

struct ExecOptions {
  const MutationOverlay* overlay = nullptr;
  std::set<ObservationPoint> capture_at;
  std::size_t step_budget = 1'000'000;
  std::size_t max_depth = 20'000;
  bool record_trace = true;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs the entry function on one test. Deterministic in all inputs.
/// Throws ArgumentError when the arguments do not fit the entry signature.
RunResult execute(const lang::TypedProgram& program, const TestCase& test,
                  const ExecOptions& options = {});

}  // namespace whyfail::interp
