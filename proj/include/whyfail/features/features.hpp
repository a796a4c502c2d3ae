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
#include <stdexcept>
#include <string>
#include <vector>

#include "whyfail/interp/interpreter.hpp"
#include "whyfail/interp/path.hpp"

namespace whyfail::features {

enum class FeatureKind { Int, Float, Bool, IsNull, Length };

/// A node of the numerical value graph.
///
/// `path` ends in `.isNull` for null tests of record references and in
/// `.length` for array lengths. Depth counts graph levels from the variable:
/// `max` is 0, `stus.length` and `stus[0].isNull` are 1, `stus[0].score` is 2.
struct FeatureDescriptor {
  interp::AccessPath path;
  FeatureKind kind = FeatureKind::Int;
  std::size_t depth = 0;
  // Can be assigned by an overlay; isNull only in the direction of null.
  bool writable = false;

  std::string name() const { return path.str(); }
  // Values are always integers (ints, bools, null tests, lengths).
  bool integral() const { return kind != FeatureKind::Float; }
  bool inspector() const { return kind == FeatureKind::IsNull || kind == FeatureKind::Length; }

  friend bool operator==(const FeatureDescriptor&, const FeatureDescriptor&) = default;
};

const char* kind_name(FeatureKind k);

/// Every feature of the value graphs of `roots` in `state`, in path order.
std::vector<FeatureDescriptor> value_graph(const interp::ProgramState& state,
                                           const std::set<std::string>& roots);

/// Reads one feature; nullopt when the path does not exist in the state.
std::optional<double> read_feature(const interp::ProgramState& state,
                                   const FeatureDescriptor& feature);

/// All features, or nullopt if any is absent.
std::optional<std::vector<double>> read_features(const interp::ProgramState& state,
                                                 const std::vector<FeatureDescriptor>& features);

class NoCommonFeatures : public std::runtime_error {
 public:
  NoCommonFeatures() : std::runtime_error("no feature is common to all program states") {}
};

/// Features present in every state, in the path order of the first state.
/// When array lengths differ between states, elements beyond the shortest
/// array are dropped and a `[$]` (last element) subtree is added. Features
/// with a non-finite value in some state are dropped.
std::vector<FeatureDescriptor> common_features(const std::vector<interp::ProgramState>& states,
                                               const std::set<std::string>& roots);

struct Extraction {
  std::vector<FeatureDescriptor> features;
  // One row per input state, aligned with `features`.
  std::vector<std::vector<double>> vectors;
};

/// common_features followed by reading every state.
Extraction extract_features(const std::vector<interp::ProgramState>& states,
                            const std::set<std::string>& roots);

/// Orders features for a learning session and keeps the first `n`.
///
/// Features accessed in the point's frame before the point come first, most
/// recent access first (paths compared with indices abstracted; null tests
/// and lengths never count as accessed); ties and unaccessed features go by
/// depth, then path order.
std::vector<FeatureDescriptor> prioritize(const std::vector<FeatureDescriptor>& features,
                                          const interp::Trace& failing_trace,
                                          const interp::ProgramState& failing_state,
                                          std::size_t n);

/// Index sets of size 1..k over n features. Within one size, sets are ordered
/// by their largest index, then lexicographically.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace whyfail::features
