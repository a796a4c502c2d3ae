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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whyfail/lang/ast.hpp"

namespace whyfail::interp {

/// A read or write of one memory cell.
///
/// Cells are named `f<frame>:<var>` for locals and `h<id>.<field>`,
/// `h<id>[<i>]`, `h<id>.length` for heap slots. `path` is the source-level
/// spelling with evaluated indices (`stus[2].score`); `root`/`frame` name the
/// variable the path starts from.
struct Access {
  std::string cell;
  std::string path;
  std::string root;
  std::uint64_t frame = 0;
  // Heap object holding the cell; 0 for locals.
  std::uint64_t object = 0;

  friend bool operator==(const Access&, const Access&) = default;
};

struct TraceEvent {
  lang::LocationId location;
  std::size_t visit = 0;
  std::vector<Access> defs;
  std::vector<Access> uses;
  std::optional<std::size_t> control_parent;
  // Heap objects allocated while evaluating this event.
  std::vector<std::uint64_t> created;
  // Frame the statement ran in.
  std::uint64_t frame = 0;
  // Evaluation of an if/while/for condition.
  bool is_condition = false;
  // The statement raised a runtime fault during this event.
  bool raised = false;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using Trace = std::vector<TraceEvent>;

/// One line per event: `<index> <ordinal> <visit> defs=[..] uses=[..] cp=<n|->`.
std::string dump_trace(const Trace& trace);

}  // namespace whyfail::interp
