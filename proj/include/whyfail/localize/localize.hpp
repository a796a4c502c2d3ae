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
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "whyfail/interp/interpreter.hpp"
#include "whyfail/testgen/suite.hpp"

namespace whyfail::localize {

struct StatementScore {
  std::size_t ef = 0;  // failing tests covering the statement
  std::size_t ep = 0;  // non-failing tests covering it (Pass and Irrelevant)
  double score = 0.0;
};

struct SuspiciousnessMap {
  std::map<std::size_t, StatementScore> statements;
  std::size_t failed_total = 0;

  double score(std::size_t ordinal) const;
};

class NoFailingTest : public std::runtime_error {
 public:
  NoFailingTest() : std::runtime_error("no failing test: the designated assertion never fails") {}
};

/// Ochiai over the given statements: ef / sqrt(nf * (ef + ep)), 0 when the
/// denominator vanishes.
SuspiciousnessMap ochiai_scores(const testgen::SuiteResult& suite,
                                const std::set<std::size_t>& statements);

/// Same, from raw coverage rows and per-row failure flags.
SuspiciousnessMap ochiai_scores(const std::vector<std::set<std::size_t>>& coverage,
                                const std::vector<bool>& failed,
                                const std::set<std::size_t>& statements);

struct CandidatePoint {
  interp::ObservationPoint point;
  double score = 0.0;
  // Suspicious statements represented by this point, ascending.
  std::vector<std::size_t> members;
};

/// Ranked observation points for the statements of `slice` scoring at least
/// `x_threshold`. `failing` is the run the slice was taken from.
std::vector<CandidatePoint> candidate_points(const lang::TypedProgram& program,
                                             const std::set<std::size_t>& slice,
                                             const SuspiciousnessMap& scores,
                                             const interp::RunResult& failing, double x_threshold,
                                             std::size_t max_points);

}  // namespace whyfail::localize
