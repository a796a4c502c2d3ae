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
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace whyfail::learn {

using Point = std::vector<double>;

/// Accepts v iff sum(coeffs[i] * v[i]) >= rhs.
struct HalfSpace {
  std::vector<double> coeffs;
  double rhs = 0.0;

  bool accepts(const Point& v) const;
  double evaluate(const Point& v) const;  // lhs - rhs
  /// Scaled to unit Euclidean norm.
  HalfSpace normalized() const;
};

/// Conjunction of half-spaces over one feature combination.
struct Classifier {
  std::vector<HalfSpace> clauses;
  std::vector<std::size_t> features;
  // Set by simplify(); a clause that could not be rationalized keeps its
  // original coefficients and is listed here.
  std::vector<std::size_t> unsimplified;

  bool accepts(const Point& v) const;
};

class WidthMismatch : public std::invalid_argument {
 public:
  WidthMismatch() : std::invalid_argument("feature vectors of different widths") {}
};

/// Hard-margin separator: every positive accepted, every negative rejected,
/// with the margin maximal. nullopt when inseparable or out of time.
std::optional<HalfSpace> max_margin_separator(
    const std::vector<Point>& positives, const std::vector<Point>& negatives,
    std::chrono::milliseconds budget = std::chrono::seconds(5));

/// Geometric margin of `h` on the data: half the gap between the two sets
/// along the unit normal. Negative when `h` does not separate them.
double margin(const HalfSpace& h, const std::vector<Point>& positives,
              const std::vector<Point>& negatives);

/// Conjunction of half-spaces separating positives from negatives. A single
/// half-space is tried first; otherwise negatives are cut off one at a time,
/// lowest index first. nullopt when some separation fails, in particular if
/// a vector carries both labels.
std::optional<Classifier> conjunctive_classifier(
    const std::vector<Point>& positives, const std::vector<Point>& negatives,
    std::chrono::milliseconds budget = std::chrono::seconds(5));

/// x >= c or x <= c over one feature, c at the midpoint between the classes.
/// Integer midpoints round toward the negatives' side so the rule stays exact.
std::optional<HalfSpace> threshold_1d(const std::vector<double>& positives,
                                      const std::vector<double>& negatives, bool integral);

/// Rewrites each clause with small integer coefficients. `integral[i]` tells
/// whether feature i of the clause only takes integer values.
Classifier simplify(const Classifier& c, const std::vector<bool>& integral);

/// Same accepted set up to the comparison tolerance: per-coefficient 1e-6
/// after normalization.
bool equivalent(const HalfSpace& a, const HalfSpace& b, double tolerance = 1e-6);
bool equivalent(const Classifier& a, const Classifier& b, double tolerance = 1e-6);

/// Human-readable clause, e.g. "max ≥ stus[2].score" or "x ≤ 0.5".
std::string pretty(const HalfSpace& h, const std::vector<std::string>& names);
std::string pretty(const Classifier& c, const std::vector<std::string>& names);

}  // namespace whyfail::learn
