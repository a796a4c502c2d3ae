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

#include "whyfail/interp/slice.hpp"

#include <unordered_map>

namespace whyfail::interp {

ReachingDefs reaching_definitions(const Trace& trace) {
  ReachingDefs out(trace.size());
  std::unordered_map<std::string, std::size_t> last_def;
  std::unordered_map<std::uint64_t, std::size_t> allocated;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceEvent& e = trace[i];
    out[i].reserve(e.uses.size());
    for (const Access& u : e.uses) {
      std::optional<std::size_t> src;
      if (auto it = last_def.find(u.cell); it != last_def.end()) {
        src = it->second;
      } else if (u.object) {
        if (auto a = allocated.find(u.object); a != allocated.end()) src = a->second;
      }
      out[i].push_back(src);
    }
    for (const Access& d : e.defs) last_def[d.cell] = i;
    for (std::uint64_t id : e.created) allocated[id] = i;
  }
  return out;
}

Slice dynamic_slice(const Trace& trace, std::size_t criterion) {
  Slice slice;
  slice.events.assign(trace.size(), false);
  if (criterion >= trace.size()) return slice;
  const ReachingDefs defs = reaching_definitions(trace);

  std::vector<std::size_t> work{criterion};
  slice.events[criterion] = true;
  auto visit = [&](std::size_t i) {
    if (!slice.events[i]) {
      slice.events[i] = true;
      work.push_back(i);
    }
  };
  while (!work.empty()) {
    std::size_t i = work.back();
    work.pop_back();
    slice.statements.insert(trace[i].location.ordinal);
    for (const auto& src : defs[i])
      if (src) visit(*src);
    if (trace[i].control_parent) visit(*trace[i].control_parent);
  }
  return slice;
}

namespace {

void collect_objects(const lang::Value& v, std::set<std::uint64_t>& out) {
  if (const auto* r = std::get_if<lang::RecordRef>(&v)) {
    if (!out.insert((*r)->id).second) return;
    for (const auto& f : (*r)->fields) collect_objects(f, out);
  } else if (const auto* a = std::get_if<lang::ArrayRef>(&v)) {
    if (!out.insert((*a)->id).second) return;
    for (const auto& e : (*a)->elements) collect_objects(e, out);
  }
}

}  // namespace

std::set<std::string> relevant_variables_at(const Trace& trace, const Slice& slice,
                                            const ProgramState& state) {
  const ReachingDefs defs = reaching_definitions(trace);
  std::vector<std::set<std::uint64_t>> reach(state.bindings.size());
  for (std::size_t b = 0; b < state.bindings.size(); ++b)
    collect_objects(state.bindings[b].second, reach[b]);

  std::set<std::string> out;
  const std::size_t start = state.trace_position;
  for (std::size_t i = start; i < trace.size() && i < slice.events.size(); ++i) {
    if (!slice.events[i]) continue;
    const TraceEvent& e = trace[i];
    for (std::size_t u = 0; u < e.uses.size(); ++u) {
      const auto& src = defs[i][u];
      if (src && *src >= start) continue;
      const Access& a = e.uses[u];
      if (a.frame == state.frame && state.find(a.root)) {
        out.insert(a.root);
        continue;
      }
      if (!a.object) continue;
      for (std::size_t b = 0; b < state.bindings.size(); ++b)
        if (reach[b].count(a.object)) out.insert(state.bindings[b].first);
    }
  }
  return out;
}

}  // namespace whyfail::interp
