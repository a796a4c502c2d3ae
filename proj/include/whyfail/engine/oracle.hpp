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
#include <vector>

#include "whyfail/features/dataset.hpp"
#include "whyfail/interp/interpreter.hpp"

namespace whyfail::engine {

/// Forces one session feature to a value.
struct FeatureAssignment {
  std::size_t feature;
  double value;

  friend bool operator==(const FeatureAssignment&, const FeatureAssignment&) = default;
  friend auto operator<=>(const FeatureAssignment&, const FeatureAssignment&) = default;
};

/// Labels the states obtained by forcing features to values. Returned
/// vectors span all session features; origin is left to the caller.
class LabelingOracle {
 public:
  virtual ~LabelingOracle() = default;
  virtual std::vector<features::FeatureVector> query(
      const std::vector<FeatureAssignment>& assignments) = 0;
  std::size_t queries() const { return queries_; }

 protected:
  std::size_t queries_ = 0;
};

/// Re-runs every test that reaches `point` with the assignments injected
/// there. Pass gives a positive vector, Fail a negative one, and Irrelevant
/// runs (or states missing a feature) give none.
class ProgramOracle : public LabelingOracle {
 public:
  ProgramOracle(const lang::TypedProgram& program, std::vector<interp::TestCase> tests,
                interp::ObservationPoint point, std::vector<features::FeatureDescriptor> features);

  std::vector<features::FeatureVector> query(
      const std::vector<FeatureAssignment>& assignments) override;

  std::size_t runs() const { return runs_; }

 private:
  const lang::TypedProgram& program_;
  std::vector<interp::TestCase> tests_;
  interp::ObservationPoint point_;
  std::vector<features::FeatureDescriptor> features_;
  std::size_t runs_ = 0;
};

/// Value written by an overlay for `value` of a feature; nullopt when the
/// feature cannot hold it (non-writable, non-integral int, out of range).
std::optional<lang::Value> overlay_value(const features::FeatureDescriptor& f, double value);

}  // namespace whyfail::engine
