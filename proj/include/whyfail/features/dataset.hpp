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
#include <string>
#include <vector>

#include "whyfail/features/features.hpp"

namespace whyfail::features {

enum class Label { Positive, Negative };
enum class Origin { Observed, Synthesized, Sampled };

const char* label_name(Label l);
const char* origin_name(Origin o);

struct FeatureVector {
  std::vector<double> values;
  Label label = Label::Positive;
  Origin origin = Origin::Observed;
  // Test the vector was produced by.
  std::size_t test_id = 0;
};

/// F+ and F- of one learning session, in insertion order. Exact duplicates
/// within a label are dropped; the same vector under both labels is kept.
class LabeledDataset {
 public:
  explicit LabeledDataset(std::size_t width = 0) : width_(width) {}

  /// Returns false if the vector was a duplicate.
  bool add(FeatureVector v);

  std::size_t width() const { return width_; }
  const std::vector<FeatureVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  std::size_t count(Label l) const;
  std::size_t count(Origin o) const;

  /// Values of one label projected onto `columns`.
  std::vector<std::vector<double>> project(Label l, const std::vector<std::size_t>& columns) const;

 private:
  std::size_t width_;
  std::vector<FeatureVector> vectors_;
};

/// CSV with header `label,origin,<feature paths>` and one row per vector.
std::string dataset_csv(const std::vector<FeatureDescriptor>& features,
                        const LabeledDataset& data);

}  // namespace whyfail::features
