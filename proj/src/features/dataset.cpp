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

#include "whyfail/features/dataset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "whyfail/lang/value.hpp"

namespace whyfail::features {

const char* label_name(Label l) { return l == Label::Positive ? "positive" : "negative"; }

const char* origin_name(Origin o) {
  switch (o) {
    case Origin::Observed: return "observed";
    case Origin::Synthesized: return "synthesized";
    case Origin::Sampled: return "sampled";
  }
  return "?";
}

bool LabeledDataset::add(FeatureVector v) {
  if (v.values.size() != width_) throw std::invalid_argument("feature vector has the wrong width");
  for (const auto& w : vectors_)
    if (w.label == v.label && w.values == v.values) return false;
  vectors_.push_back(std::move(v));
  return true;
}

std::size_t LabeledDataset::count(Label l) const {
  return static_cast<std::size_t>(std::count_if(
      vectors_.begin(), vectors_.end(), [&](const FeatureVector& v) { return v.label == l; }));
}

std::size_t LabeledDataset::count(Origin o) const {
  return static_cast<std::size_t>(std::count_if(
      vectors_.begin(), vectors_.end(), [&](const FeatureVector& v) { return v.origin == o; }));
}

std::vector<std::vector<double>> LabeledDataset::project(
    Label l, const std::vector<std::size_t>& columns) const {
  std::vector<std::vector<double>> out;
  for (const auto& v : vectors_) {
    if (v.label != l) continue;
    std::vector<double> row;
    row.reserve(columns.size());
    for (std::size_t c : columns) row.push_back(v.values.at(c));
    out.push_back(std::move(row));
  }
  return out;
}

std::string dataset_csv(const std::vector<FeatureDescriptor>& features,
                        const LabeledDataset& data) {
  std::ostringstream out;
  out << "label,origin";
  for (const auto& f : features) out << ',' << f.name();
  out << '\n';
  for (const auto& v : data.vectors()) {
    out << label_name(v.label) << ',' << origin_name(v.origin);
    for (std::size_t i = 0; i < v.values.size(); ++i) {
      out << ',';
      if (i < features.size() && features[i].integral())
        out << static_cast<long long>(v.values[i]);
      else
        out << lang::format_double(v.values[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace whyfail::features
