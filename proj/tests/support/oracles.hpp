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

// Independent reference computations and random case generators shared by
// the unit tests and the acceptance runner.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whyfail/engine/engine.hpp"
#include "whyfail/learn/classifier.hpp"
#include "whyfail/lang/typecheck.hpp"

namespace whyfail::testing {

struct Corpus {
  lang::TypedProgram program;
  std::vector<interp::TestCase> tests;
};

std::string corpus_dir();
Corpus load_corpus(const std::string& name);
std::vector<std::string> corpus_names();

// --- max-margin separation -------------------------------------------------

struct LabeledPoints {
  std::vector<learn::Point> positives;
  std::vector<learn::Point> negatives;
};

/// Random linearly separable set with `count` points in `dim` dimensions.
LabeledPoints random_separable(std::uint64_t seed, std::size_t count, std::size_t dim);

/// Optimal hard margin by enumerating support sets of size 2..dim+1 and
/// solving their KKT systems. nullopt when no candidate is feasible.
std::optional<double> brute_force_margin(const LabeledPoints& data);

/// Separator checks for one case; empty string when all hold.
std::string check_separator_case(std::uint64_t seed);

// --- conjunctions ----------------------------------------------------------

/// Integer points inside an axis-aligned box (positives) and outside it
/// (negatives), with 1..3 active faces.
LabeledPoints random_axis_box(std::uint64_t seed);

/// Empty string when the conjunctive classifier classifies the case exactly.
std::string check_axis_box_case(std::uint64_t seed);

// --- slicing ---------------------------------------------------------------

struct StraightLine {
  std::string source;
  // Statement ordinals of the backward closure from the assertion.
  std::set<std::size_t> expected_slice;
  std::vector<std::int64_t> args;
};

/// Random straight-line program over int parameters a, b, c ending in one
/// assertion, with its slice computed from last definitions.
StraightLine random_straight_line(std::uint64_t seed);

/// Empty string when the dynamic slice equals the reaching-definitions slice.
std::string check_slice_case(std::uint64_t seed);

// --- simplification --------------------------------------------------------

/// Random integer clause scaled by a positive factor; empty string when
/// simplify() accepts exactly the same grid points.
std::string check_simplify_case(std::uint64_t seed);

// --- determinism -----------------------------------------------------------

/// Runs generation, suite, localization and explanation twice with the same
/// seed on a corpus program; empty string when outputs are byte-identical.
std::string check_determinism_case(const std::string& corpus, std::uint64_t seed);

// --- float boundary ----------------------------------------------------------

/// Largest double below 0.5 whose run of the rounding program passes,
/// found by stepping down through adjacent doubles.
double float_boundary(const lang::TypedProgram& program);

}  // namespace whyfail::testing
