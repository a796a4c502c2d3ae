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

#include <vector>

#include "whyfail/interp/interpreter.hpp"

namespace whyfail::testgen {

/// Per-test results in test order plus the verdict partition (indices into
/// the test list).
struct SuiteResult {
  std::vector<interp::RunResult> results;
  std::vector<std::size_t> passed;
  std::vector<std::size_t> failed;
  std::vector<std::size_t> irrelevant;
};

SuiteResult run_suite(const lang::TypedProgram& program, const std::vector<interp::TestCase>& tests,
                      const interp::ExecOptions& options = {});

}  // namespace whyfail::testgen
