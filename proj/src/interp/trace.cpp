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

#include "whyfail/interp/trace.hpp"

#include <sstream>

namespace whyfail::interp {

namespace {

void write_accesses(std::ostringstream& out, const std::vector<Access>& accesses) {
  out << "[";
  for (std::size_t i = 0; i < accesses.size(); ++i) {
    if (i) out << ",";
    out << accesses[i].path << "@" << accesses[i].cell;
  }
  out << "]";
}

}  // namespace

std::string dump_trace(const Trace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceEvent& e = trace[i];
    out << i << " " << e.location.ordinal << " " << e.visit << " defs=";
    write_accesses(out, e.defs);
    out << " uses=";
    write_accesses(out, e.uses);
    out << " cp=";
    if (e.control_parent)
      out << *e.control_parent;
    else
      out << "-";
    if (e.raised) out << " raised";
    out << "\n";
  }
  return out.str();
}

}  // namespace whyfail::interp
