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

#include "whyfail/features/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

namespace whyfail::features {

using interp::AccessPath;
using interp::PathStep;
using lang::Value;

const char* kind_name(FeatureKind k) {
  switch (k) {
    case FeatureKind::Int: return "int";
    case FeatureKind::Float: return "float";
    case FeatureKind::Bool: return "bool";
    case FeatureKind::IsNull: return "isNull";
    case FeatureKind::Length: return "length";
  }
  return "?";
}

namespace {

struct Node {
  FeatureDescriptor feature;
  double value = 0.0;
};

void enumerate(const AccessPath& path, const Value& v, std::vector<Node>& out) {
  const std::size_t level = path.level();
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    out.push_back({{path, FeatureKind::Int, level, true}, static_cast<double>(*i)});
  } else if (const auto* d = std::get_if<double>(&v)) {
    out.push_back({{path, FeatureKind::Float, level, true}, *d});
  } else if (const auto* b = std::get_if<bool>(&v)) {
    out.push_back({{path, FeatureKind::Bool, level, true}, *b ? 1.0 : 0.0});
  } else if (lang::is_null(v)) {
    out.push_back({{path.field("isNull"), FeatureKind::IsNull, level, true}, 1.0});
  } else if (const auto* r = std::get_if<lang::RecordRef>(&v)) {
    out.push_back({{path.field("isNull"), FeatureKind::IsNull, level, true}, 0.0});
    const auto& def = *(*r)->def;
    for (std::size_t f = 0; f < def.fields.size(); ++f)
      enumerate(path.field(def.fields[f].name), (*r)->fields[f], out);
  } else if (const auto* a = std::get_if<lang::ArrayRef>(&v)) {
    const auto& elems = (*a)->elements;
    out.push_back({{path.field("length"), FeatureKind::Length, level + 1, false},
                   static_cast<double>(elems.size())});
    for (std::size_t i = 0; i < elems.size(); ++i) enumerate(path.index(i), elems[i], out);
    if (!elems.empty()) enumerate(path.last(), elems.back(), out);
  }
}

std::vector<Node> graph(const interp::ProgramState& state, const std::set<std::string>& roots) {
  std::vector<Node> out;
  for (const auto& [name, value] : state.bindings)
    if (roots.count(name)) enumerate(AccessPath(name), value, out);
  return out;
}

const Value* resolve(const interp::ProgramState& state, const AccessPath& path, std::size_t steps) {
  const Value* v = state.find(path.root);
  for (std::size_t i = 0; v && i < steps; ++i) {
    const PathStep& s = path.steps[i];
    if (s.kind == PathStep::Kind::Field) {
      const auto* r = std::get_if<lang::RecordRef>(v);
      if (!r) return nullptr;
      int idx = (*r)->def->field_index(s.field);
      if (idx < 0) return nullptr;
      v = &(*r)->fields[static_cast<std::size_t>(idx)];
    } else {
      const auto* a = std::get_if<lang::ArrayRef>(v);
      if (!a || (*a)->elements.empty() || s.kind == PathStep::Kind::Any) return nullptr;
      std::size_t idx = s.kind == PathStep::Kind::Last ? (*a)->elements.size() - 1 : s.index;
      if (idx >= (*a)->elements.size()) return nullptr;
      v = &(*a)->elements[idx];
    }
  }
  return v;
}

// Prefix of `path` up to (excluding) its first `[$]` step, if any.
std::optional<std::string> last_step_owner(const AccessPath& path) {
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i].kind == PathStep::Kind::Last) {
      AccessPath prefix(path.root);
      prefix.steps.assign(path.steps.begin(), path.steps.begin() + static_cast<long>(i));
      return prefix.str();
    }
  }
  return std::nullopt;
}

std::string abstract_text(const std::string& path) {
  static const std::regex index(R"(\[(\d+|\$)\])");
  return std::regex_replace(path, index, "[*]");
}

}  // namespace

std::vector<FeatureDescriptor> value_graph(const interp::ProgramState& state,
                                           const std::set<std::string>& roots) {
  std::vector<FeatureDescriptor> out;
  for (auto& n : graph(state, roots)) out.push_back(std::move(n.feature));
  return out;
}

std::optional<double> read_feature(const interp::ProgramState& state,
                                   const FeatureDescriptor& feature) {
  const AccessPath& p = feature.path;
  switch (feature.kind) {
    case FeatureKind::IsNull: {
      const Value* v = resolve(state, p, p.steps.size() - 1);
      if (!v) return std::nullopt;
      if (lang::is_null(*v)) return 1.0;
      if (std::holds_alternative<lang::RecordRef>(*v)) return 0.0;
      return std::nullopt;
    }
    case FeatureKind::Length: {
      const Value* v = resolve(state, p, p.steps.size() - 1);
      if (!v) return std::nullopt;
      if (const auto* a = std::get_if<lang::ArrayRef>(v))
        return static_cast<double>((*a)->elements.size());
      return std::nullopt;
    }
    default: break;
  }
  const Value* v = resolve(state, p, p.steps.size());
  if (!v) return std::nullopt;
  if (feature.kind == FeatureKind::Int)
    if (const auto* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
  if (feature.kind == FeatureKind::Float)
    if (const auto* d = std::get_if<double>(v)) return *d;
  if (feature.kind == FeatureKind::Bool)
    if (const auto* b = std::get_if<bool>(v)) return *b ? 1.0 : 0.0;
  return std::nullopt;
}

std::optional<std::vector<double>> read_features(const interp::ProgramState& state,
                                                 const std::vector<FeatureDescriptor>& features) {
  std::vector<double> out;
  out.reserve(features.size());
  for (const auto& f : features) {
    auto v = read_feature(state, f);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::vector<FeatureDescriptor> common_features(const std::vector<interp::ProgramState>& states,
                                               const std::set<std::string>& roots) {
  if (states.empty()) throw NoCommonFeatures();
  std::vector<std::map<std::string, Node>> per_state;
  for (const auto& s : states) {
    std::map<std::string, Node> m;
    for (auto& n : graph(s, roots)) m.emplace(n.feature.name(), std::move(n));
    per_state.push_back(std::move(m));
  }

  auto present_everywhere = [&](const Node& n) {
    const std::string name = n.feature.name();
    for (const auto& m : per_state) {
      auto it = m.find(name);
      if (it == m.end() || it->second.feature.kind != n.feature.kind ||
          !std::isfinite(it->second.value))
        return false;
    }
    return true;
  };

  // Arrays whose length is the same in every state need no `[$]` features.
  auto same_length = [&](const std::string& array) {
    const std::string key = array + ".length";
    std::optional<double> len;
    for (const auto& m : per_state) {
      auto it = m.find(key);
      if (it == m.end()) return false;
      if (len && *len != it->second.value) return false;
      len = it->second.value;
    }
    return true;
  };

  std::vector<FeatureDescriptor> out;
  for (const auto& n : graph(states.front(), roots)) {
    if (!present_everywhere(n)) continue;
    if (auto owner = last_step_owner(n.feature.path); owner && same_length(*owner)) continue;
    out.push_back(n.feature);
  }
  if (out.empty()) throw NoCommonFeatures();
  return out;
}

Extraction extract_features(const std::vector<interp::ProgramState>& states,
                            const std::set<std::string>& roots) {
  Extraction out;
  out.features = common_features(states, roots);
  for (const auto& s : states) out.vectors.push_back(*read_features(s, out.features));
  return out;
}

std::vector<FeatureDescriptor> prioritize(const std::vector<FeatureDescriptor>& features,
                                          const interp::Trace& failing_trace,
                                          const interp::ProgramState& failing_state,
                                          std::size_t n) {
  std::map<std::string, std::size_t> last_access;
  const std::size_t end = std::min(failing_state.trace_position, failing_trace.size());
  for (std::size_t e = 0; e < end; ++e) {
    auto note = [&](const interp::Access& a) {
      if (a.frame == failing_state.frame && !a.root.empty())
        last_access[abstract_text(a.path)] = e;
    };
    for (const auto& a : failing_trace[e].uses) note(a);
    for (const auto& a : failing_trace[e].defs) note(a);
  }

  struct Keyed {
    std::optional<std::size_t> recency;
    std::size_t order;
  };
  std::vector<Keyed> keys;
  for (std::size_t i = 0; i < features.size(); ++i) {
    Keyed k{std::nullopt, i};
    if (!features[i].inspector()) {
      auto it = last_access.find(features[i].path.abstracted().str());
      if (it != last_access.end()) k.recency = it->second;
    }
    keys.push_back(k);
  }
  std::stable_sort(keys.begin(), keys.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.recency.has_value() != b.recency.has_value()) return a.recency.has_value();
    if (a.recency && *a.recency != *b.recency) return *a.recency > *b.recency;
    if (features[a.order].depth != features[b.order].depth)
      return features[a.order].depth < features[b.order].depth;
    return a.order < b.order;
  });

  std::vector<FeatureDescriptor> out;
  for (std::size_t i = 0; i < keys.size() && i < n; ++i) out.push_back(features[keys[i].order]);
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size <= std::min(n, k); ++size) {
    for (std::size_t top = size - 1; top < n; ++top) {
      // All (size-1)-subsets of [0, top) in lexicographic order, plus top.
      std::vector<std::size_t> idx(size - 1);
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      for (;;) {
        std::vector<std::size_t> combo = idx;
        combo.push_back(top);
        out.push_back(std::move(combo));
        // Advance to the next subset.
        std::size_t j = idx.size();
        while (j > 0 && idx[j - 1] == top - (idx.size() - (j - 1))) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t t = j; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
      }
    }
  }
  return out;
}

}  // namespace whyfail::features
