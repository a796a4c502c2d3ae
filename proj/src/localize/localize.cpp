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

#include "whyfail/localize/localize.hpp"

#include <algorithm>
#include <cmath>

namespace whyfail::localize {

using interp::ObservationPoint;
using interp::Position;

double SuspiciousnessMap::score(std::size_t ordinal) const {
  auto it = statements.find(ordinal);
  return it == statements.end() ? 0.0 : it->second.score;
}

SuspiciousnessMap ochiai_scores(const std::vector<std::set<std::size_t>>& coverage,
                                const std::vector<bool>& failed,
                                const std::set<std::size_t>& statements) {
  SuspiciousnessMap out;
  out.failed_total = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), true));
  if (out.failed_total == 0) throw NoFailingTest();
  for (std::size_t s : statements) {
    StatementScore sc;
    for (std::size_t t = 0; t < coverage.size(); ++t) {
      if (!coverage[t].count(s)) continue;
      if (failed[t])
        ++sc.ef;
      else
        ++sc.ep;
    }
    const double denom = std::sqrt(static_cast<double>(out.failed_total) *
                                   static_cast<double>(sc.ef + sc.ep));
    sc.score = denom > 0.0 ? static_cast<double>(sc.ef) / denom : 0.0;
    out.statements.emplace(s, sc);
  }
  return out;
}

SuspiciousnessMap ochiai_scores(const testgen::SuiteResult& suite,
                                const std::set<std::size_t>& statements) {
  std::vector<std::set<std::size_t>> coverage;
  std::vector<bool> failed;
  for (const auto& r : suite.results) {
    coverage.push_back(r.coverage);
    failed.push_back(r.verdict == interp::Verdict::Fail);
  }
  return ochiai_scores(coverage, failed, statements);
}

namespace {

std::optional<std::size_t> trace_position(const interp::RunResult& run, const ObservationPoint& p) {
  return p.position == Position::Before ? run.first_entry.at(p.ordinal)
                                        : run.first_exit.at(p.ordinal);
}

// Where a statement would be observed before hoisting and grouping.
ObservationPoint natural_point(const lang::TypedProgram& program, std::size_t s) {
  const auto& info = program.info(s);
  if (!info.enclosing_loops.empty()) return {info.enclosing_loops.front(), Position::After};
  if (program.statement(s).kind == lang::Stmt::Kind::Return) return {s, Position::Before};
  return {s, Position::After};
}

// "After s" is written "Before t" when t, the next statement, is compound.
ObservationPoint canonical(const lang::TypedProgram& program, ObservationPoint p) {
  if (p.position != Position::After) return p;
  const auto& info = program.info(p.ordinal);
  const auto& siblings = *info.siblings;
  if (info.position + 1 < siblings.size()) {
    const lang::Stmt& next = *siblings[info.position + 1];
    if (next.is_compound()) return {next.loc.ordinal, Position::Before};
  }
  return p;
}

bool groupable(const lang::TypedProgram& program, std::size_t s) {
  const auto& info = program.info(s);
  const lang::Stmt& stmt = program.statement(s);
  return info.enclosing_loops.empty() && !stmt.is_compound() &&
         stmt.kind != lang::Stmt::Kind::Return;
}

}  // namespace

std::vector<CandidatePoint> candidate_points(const lang::TypedProgram& program,
                                             const std::set<std::size_t>& slice,
                                             const SuspiciousnessMap& scores,
                                             const interp::RunResult& failing, double x_threshold,
                                             std::size_t max_points) {
  const auto assertion = program.designated_assertion();
  const std::size_t assertion_event =
      failing.assertion_event ? *failing.assertion_event : failing.trace.size();

  // Keep suspicious statements whose observation point lies strictly before
  // the assertion with at least one write in between.
  std::vector<std::size_t> kept;
  for (std::size_t s : slice) {
    if (assertion && s == *assertion) continue;
    if (scores.score(s) < x_threshold) continue;
    auto pos = trace_position(failing, natural_point(program, s));
    if (!pos || *pos >= assertion_event) continue;
    bool writes = false;
    for (std::size_t e = *pos; e < assertion_event && e < failing.trace.size() && !writes; ++e)
      writes = !failing.trace[e].defs.empty();
    if (!writes) continue;
    kept.push_back(s);
  }

  // Group runs of adjacent call-free simple statements; everything else maps
  // to its natural point on its own.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t s : kept) {
    if (groupable(program, s) && !groups.empty()) {
      std::size_t last = groups.back().back();
      const auto& a = program.info(last);
      const auto& b = program.info(s);
      if (groupable(program, last) && a.siblings == b.siblings && a.position + 1 == b.position &&
          !a.has_call && !b.has_call) {
        groups.back().push_back(s);
        continue;
      }
    }
    groups.push_back({s});
  }

  std::map<ObservationPoint, CandidatePoint> merged;
  for (const auto& g : groups) {
    ObservationPoint p = canonical(program, natural_point(program, g.back()));
    CandidatePoint& c = merged[p];
    c.point = p;
    for (std::size_t s : g) {
      c.members.push_back(s);
      c.score = std::max(c.score, scores.score(s));
    }
  }

  std::vector<CandidatePoint> out;
  for (auto& [p, c] : merged) {
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CandidatePoint& a, const CandidatePoint& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.members.front() < b.members.front();
  });
  if (out.size() > max_points) out.resize(max_points);
  return out;
}

}  // namespace whyfail::localize
