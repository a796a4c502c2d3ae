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

#include "whyfail/engine/oracle.hpp"

#include <cmath>

namespace whyfail::engine {

using features::FeatureKind;

std::optional<lang::Value> overlay_value(const features::FeatureDescriptor& f, double value) {
  if (!f.writable || !std::isfinite(value)) return std::nullopt;
  switch (f.kind) {
    case FeatureKind::Float: return value;
    case FeatureKind::Bool: return value != 0.0;
    case FeatureKind::IsNull: return std::int64_t{value != 0.0 ? 1 : 0};
    case FeatureKind::Int:
      // 2^63 is exactly representable; anything at or past it overflows.
      if (value != std::floor(value) || value < -9223372036854775808.0 ||
          value >= 9223372036854775808.0)
        return std::nullopt;
      return static_cast<std::int64_t>(value);
    case FeatureKind::Length: return std::nullopt;
  }
  return std::nullopt;
}

ProgramOracle::ProgramOracle(const lang::TypedProgram& program, std::vector<interp::TestCase> tests,
                             interp::ObservationPoint point,
                             std::vector<features::FeatureDescriptor> features)
    : program_(program), tests_(std::move(tests)), point_(point), features_(std::move(features)) {}

std::vector<features::FeatureVector> ProgramOracle::query(
    const std::vector<FeatureAssignment>& assignments) {
  ++queries_;
  interp::MutationOverlay overlay{point_, {}};
  for (const auto& a : assignments) {
    const auto& f = features_.at(a.feature);
    if (auto v = overlay_value(f, a.value)) overlay.assignments.push_back({f.path, *v});
  }
  interp::ExecOptions options;
  options.overlay = &overlay;
  options.capture_at = {point_};
  options.record_trace = false;

  std::vector<features::FeatureVector> out;
  for (const auto& t : tests_) {
    ++runs_;
    auto r = interp::execute(program_, t, options);
    if (r.verdict == interp::Verdict::Irrelevant) continue;
    auto it = r.captures.find(point_);
    if (it == r.captures.end()) continue;
    auto values = features::read_features(it->second, features_);
    if (!values) continue;
    features::FeatureVector v;
    v.values = std::move(*values);
    v.label = r.verdict == interp::Verdict::Pass ? features::Label::Positive
                                                 : features::Label::Negative;
    v.test_id = t.id;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace whyfail::engine
