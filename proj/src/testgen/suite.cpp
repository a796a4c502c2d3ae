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

#include "whyfail/testgen/suite.hpp"

namespace whyfail::testgen {

SuiteResult run_suite(const lang::TypedProgram& program, const std::vector<interp::TestCase>& tests,
                      const interp::ExecOptions& options) {
  SuiteResult out;
  out.results.reserve(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    out.results.push_back(interp::execute(program, tests[i], options));
    switch (out.results.back().verdict) {
      case interp::Verdict::Pass: out.passed.push_back(i); break;
      case interp::Verdict::Fail: out.failed.push_back(i); break;
      case interp::Verdict::Irrelevant: out.irrelevant.push_back(i); break;
    }
  }
  return out;
}

}  // namespace whyfail::testgen
