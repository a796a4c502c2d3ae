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

#include "whyfail/engine/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "whyfail/lang/value.hpp"

namespace whyfail::engine {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Json candidate_json(const lang::TypedProgram& program, const localize::CandidatePoint& c) {
  Json j = point_json(program, c.point);
  j["score"] = c.score;
  Json members = Json::array();
  for (std::size_t s : c.members) members.push_back(s + 1);
  j["statements"] = members;
  return j;
}

}  // namespace

Json point_json(const lang::TypedProgram& program, const interp::ObservationPoint& point) {
  Json j;
  j["statement"] = point.ordinal + 1;
  j["line"] = program.statement(point.ordinal).loc.line;
  j["position"] = interp::position_name(point.position);
  j["describe"] = interp::describe(program, point);
  return j;
}

Json classifier_json(const learn::Classifier& c, const std::vector<std::string>& names) {
  Json clauses = Json::array();
  for (const auto& h : c.clauses) {
    Json clause;
    clause["coeffs"] = h.coeffs;
    clause["rhs"] = h.rhs;
    clause["pretty"] = learn::pretty(h, names);
    clauses.push_back(clause);
  }
  return clauses;
}

Json stats_json(const Stats& s) {
  Json j;
  j["tests"] = s.tests;
  j["observed"] = s.observed;
  j["synthesized"] = s.synthesized;
  j["sampled"] = s.sampled;
  j["solver_calls"] = s.solver_calls;
  j["oracle_queries"] = s.oracle_queries;
  j["program_runs"] = s.program_runs;
  j["candidate_points"] = s.candidate_points;
  j["points_tried"] = s.points_tried;
  j["combinations_tried"] = s.combinations_tried;
  return j;
}

Json explain_json(const lang::TypedProgram& program, const ExplainResult& result) {
  Json j;
  j["explained"] = result.explanation.has_value();
  if (const auto& e = result.explanation) {
    j["point"] = point_json(program, e->point);
    j["features"] = e->feature_names;
    j["predicate_pretty"] = e->predicate;
    j["narrative"] = e->narrative;
    j["clauses"] = classifier_json(e->simplified, e->feature_names);
    j["learned_clauses"] = classifier_json(e->learned, e->feature_names);
    j["converged"] = e->converged;
  } else {
    j["message"] = "no explanation is identified";
  }
  j["stats"] = stats_json(result.explanation ? result.explanation->stats : result.stats);
  Json points = Json::array();
  for (const auto& c : result.points) points.push_back(candidate_json(program, c));
  j["candidate_points"] = points;
  Json attempts = Json::array();
  for (const auto& a : result.attempts) {
    Json aj;
    aj["point"] = interp::describe(program, a.point);
    aj["features"] = a.features;
    aj["outcome"] = a.outcome;
    aj["iterations"] = a.iterations;
    aj["classifier"] = a.classifier;
    attempts.push_back(aj);
  }
  j["attempts"] = attempts;
  return j;
}

std::string explain_text(const lang::TypedProgram& program, const ExplainResult& result) {
  std::ostringstream out;
  const Stats& s = result.explanation ? result.explanation->stats : result.stats;
  if (const auto& e = result.explanation) {
    out << e->narrative << "\n";
    out << "  point:      " << interp::describe(program, e->point) << " (statement "
        << e->point.ordinal + 1 << ")\n";
    out << "  predicate:  " << e->predicate << "\n";
    out << "  learned:    " << learn::pretty(e->learned, e->feature_names) << "\n";
  } else {
    out << "no explanation is identified\n";
  }
  out << "  vectors:    " << s.observed << " observed, " << s.synthesized << " synthesized, "
      << s.sampled << " sampled\n";
  out << "  solver:     " << s.solver_calls << " calls over " << s.combinations_tried
      << " combinations at " << s.points_tried << " of " << s.candidate_points << " points\n";
  return out.str();
}

Json localize_json(const lang::TypedProgram& program, const Localization& loc) {
  Json j;
  j["failing_test"] = loc.failing_index + 1;
  j["failed_total"] = loc.scores.failed_total;
  Json table = Json::array();
  for (const auto& [s, sc] : loc.scores.statements) {
    Json row;
    row["statement"] = s + 1;
    row["line"] = program.statement(s).loc.line;
    row["ef"] = sc.ef;
    row["ep"] = sc.ep;
    row["score"] = sc.score;
    table.push_back(row);
  }
  j["scores"] = table;
  Json points = Json::array();
  for (const auto& c : loc.points) points.push_back(candidate_json(program, c));
  j["candidate_points"] = points;
  return j;
}

std::string localize_text(const lang::TypedProgram& program, const Localization& loc) {
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%9s %5s %4s %4s %8s\n", "statement", "line", "ef", "ep", "score");
  out << buf;
  for (const auto& [s, sc] : loc.scores.statements) {
    std::snprintf(buf, sizeof buf, "%9zu %5d %4zu %4zu %8s\n", s + 1, program.statement(s).loc.line,
                  sc.ef, sc.ep, fixed(sc.score, 4).c_str());
    out << buf;
  }
  out << "\ncandidate points:\n";
  for (const auto& c : loc.points) {
    out << "  " << interp::describe(program, c.point) << "  score " << fixed(c.score, 4)
        << "  statements";
    for (std::size_t m : c.members) out << ' ' << m + 1;
    out << "\n";
  }
  return out.str();
}

Json suite_json(const std::vector<interp::TestCase>& tests, const testgen::SuiteResult& suite) {
  Json j;
  Json rows = Json::array();
  for (std::size_t i = 0; i < suite.results.size(); ++i) {
    Json row;
    row["test"] = tests[i].id;
    row["verdict"] = interp::verdict_name(suite.results[i].verdict);
    if (!suite.results[i].diagnostic.empty()) row["diagnostic"] = suite.results[i].diagnostic;
    rows.push_back(row);
  }
  j["tests"] = rows;
  j["failed"] = suite.failed.size();
  j["passed"] = suite.passed.size();
  j["irrelevant"] = suite.irrelevant.size();
  return j;
}

std::string suite_text(const std::vector<interp::TestCase>& tests,
                       const testgen::SuiteResult& suite) {
  std::ostringstream out;
  for (std::size_t i = 0; i < suite.results.size(); ++i) {
    out << "test " << tests[i].id << ": " << interp::verdict_name(suite.results[i].verdict);
    if (!suite.results[i].diagnostic.empty()) out << " (" << suite.results[i].diagnostic << ")";
    out << "\n";
  }
  out << suite.failed.size() << " failed, " << suite.passed.size() << " passed, "
      << suite.irrelevant.size() << " irrelevant\n";
  return out.str();
}

}  // namespace whyfail::engine
