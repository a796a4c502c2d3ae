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

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "whyfail/engine/oracle.hpp"
#include "whyfail/learn/classifier.hpp"
#include "whyfail/interp/slice.hpp"
#include "whyfail/localize/localize.hpp"
#include "whyfail/testgen/suite.hpp"
#include "whyfail/testgen/generator.hpp"

namespace whyfail::engine {

struct Config {
  std::size_t m = 0;            // random tests added to the given ones
  double x_threshold = 0.5;     // minimum suspiciousness of a statement
  std::size_t n = 10;           // feature vector width
  std::size_t k = 3;            // largest feature combination
  std::size_t max_clauses = 3;
  std::size_t max_points = 10;
  std::chrono::milliseconds solver_budget{5000};
  std::size_t iteration_cap = 100;
  std::size_t synthesis_cap = 256;
  std::uint64_t seed = 0;
  testgen::GenConfig generation;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct Stats {
  std::size_t tests = 0;
  std::size_t observed = 0;
  std::size_t synthesized = 0;
  std::size_t sampled = 0;
  // Invocations of the classification algorithm (conjunctive or 1-D).
  std::size_t solver_calls = 0;
  std::size_t oracle_queries = 0;
  std::size_t program_runs = 0;
  std::size_t candidate_points = 0;
  std::size_t points_tried = 0;
  std::size_t combinations_tried = 0;
};

class NoPassingTest : public std::runtime_error {
 public:
  NoPassingTest()
      : std::runtime_error(
            "no passing test: add tests that reach the assertion and satisfy it, or raise M") {}
};

/// Adds oracle labels for every combination of observed values of the
/// writable features of `combo` (subsampled to the synthesis cap).
void synthesize_data(features::LabeledDataset& data,
                     const std::vector<features::FeatureDescriptor>& features,
                     const std::vector<std::size_t>& combo, LabelingOracle& oracle,
                     const Config& config, Stats& stats);

struct SamplingResult {
  std::optional<learn::Classifier> classifier;
  bool converged = false;
  std::size_t iterations = 0;
  // Successive distinct classifiers, first to last.
  std::vector<learn::Classifier> history;
};

/// Learns a classifier over `combo`, then refines it with oracle labels at
/// boundary samples until it stops changing or the iteration cap is hit.
SamplingResult classify_with_sampling(features::LabeledDataset& data,
                                      const std::vector<features::FeatureDescriptor>& features,
                                      const std::vector<std::size_t>& combo,
                                      LabelingOracle& oracle, const Config& config, Stats& stats);

struct Explanation {
  interp::ObservationPoint point;
  std::size_t line = 0;
  std::vector<std::string> feature_names;
  learn::Classifier learned;
  learn::Classifier simplified;
  std::string predicate;
  std::string narrative;
  bool converged = true;
  Stats stats;
};

/// One feature combination tried by explain().
struct Attempt {
  interp::ObservationPoint point;
  std::vector<std::string> features;
  // "explained", "no classifier", "not converged" or "too many clauses".
  std::string outcome;
  std::size_t iterations = 0;
  // Last classifier learned, empty when none.
  std::string classifier;
};

struct ExplainResult {
  std::optional<Explanation> explanation;
  std::vector<Attempt> attempts;
  Stats stats;
  std::vector<localize::CandidatePoint> points;
};

/// Steps 1-2 of explain(): suite verdicts, slice of the first failing run,
/// suspiciousness and ranked observation points.
struct Localization {
  testgen::SuiteResult suite;
  std::size_t failing_index = 0;
  interp::Slice slice;
  localize::SuspiciousnessMap scores;
  std::vector<localize::CandidatePoint> points;
};

/// Throws localize::NoFailingTest.
Localization localize_failure(const lang::TypedProgram& program,
                              const std::vector<interp::TestCase>& tests, const Config& config);

/// Learning session at one observation point: prioritized features and the
/// vectors observed by the tests that reach it.
struct Session {
  interp::ObservationPoint point;
  std::vector<features::FeatureDescriptor> features;
  features::LabeledDataset observed;
  // Tests reaching the point, Irrelevant ones included.
  std::vector<interp::TestCase> reaching;
};

/// nullopt when the failing run misses the point or no feature is usable.
std::optional<Session> prepare_session(const lang::TypedProgram& program,
                                       const std::vector<interp::TestCase>& tests,
                                       const Localization& loc,
                                       const interp::ObservationPoint& point, const Config& config,
                                       Stats& stats);

/// Searches candidate points and feature combinations for a converged
/// classifier. Throws localize::NoFailingTest or NoPassingTest.
ExplainResult explain(const lang::TypedProgram& program,
                      const std::vector<interp::TestCase>& given, const Config& config);

/// Given tests followed by `config.m` generated ones, ids renumbered.
std::vector<interp::TestCase> assemble_tests(const lang::TypedProgram& program,
                                             const std::vector<interp::TestCase>& given,
                                             const Config& config);

/// Upper bound on solver calls for a run with `points` candidate points.
std::size_t solver_call_bound(std::size_t points, const Config& config);

}  // namespace whyfail::engine
