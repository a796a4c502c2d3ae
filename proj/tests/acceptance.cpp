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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "whyfail/engine/engine.hpp"
#include "whyfail/features/features.hpp"

namespace {

using namespace whyfail;
using interp::ObservationPoint;
using interp::Position;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Check = std::function<Outcome()>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Statement numbers in the running example are ordinals plus one.
constexpr std::size_t kStmt(std::size_t number) { return number - 1; }

Outcome ochiai_exactness() {
  auto t0 = std::chrono::steady_clock::now();
  auto c = testing::load_corpus("running_example");
  auto loc = engine::localize_failure(c.program, c.tests, {});
  const double third = 1.0 / std::sqrt(3.0);
  for (std::size_t n : {1, 2, 4, 5})
    if (std::fabs(loc.scores.score(kStmt(n)) - 0.5) > 1e-9)
      return fail("statement " + std::to_string(n) + " scores " +
                  std::to_string(loc.scores.score(kStmt(n))));
  for (std::size_t n : {3, 6, 7, 8, 9})
    if (std::fabs(loc.scores.score(kStmt(n)) - third) > 1e-9)
      return fail("statement " + std::to_string(n) + " scores " +
                  std::to_string(loc.scores.score(kStmt(n))));
  const double dt = seconds_since(t0);
  if (dt >= 1.0) return fail("took " + std::to_string(dt) + " s");
  return {true, "0.5 on {1,2,4,5}, 1/sqrt(3) on {3,6,7,8,9}"};
}

Outcome candidate_points() {
  auto t0 = std::chrono::steady_clock::now();
  auto c = testing::load_corpus("running_example");
  auto loc = engine::localize_failure(c.program, c.tests, {});
  std::set<ObservationPoint> got;
  for (const auto& p : loc.points) got.insert(p.point);
  const std::set<ObservationPoint> want = {{kStmt(8), Position::Before},
                                           {kStmt(1), Position::After},
                                           {kStmt(5), Position::Before}};
  std::string listing;
  for (const auto& p : loc.points)
    listing += std::string(listing.empty() ? "" : ", ") + interp::position_name(p.point.position) +
               " statement " + std::to_string(p.point.ordinal + 1);
  if (got != want) return fail("got " + listing);
  const double dt = seconds_since(t0);
  if (dt >= 1.0) return fail("took " + std::to_string(dt) + " s");
  return {true, listing};
}

Outcome end_to_end() {
  auto t0 = std::chrono::steady_clock::now();
  auto c = testing::load_corpus("running_example");
  auto r = engine::explain(c.program, c.tests, {});
  const double dt = seconds_since(t0);
  if (!r.explanation) return fail("no explanation");
  const auto& e = *r.explanation;
  if (e.point != ObservationPoint{kStmt(8), Position::Before})
    return fail("explained at " + interp::describe(c.program, e.point));
  if (e.feature_names != std::vector<std::string>{"max", "stus[2].score"} ||
      e.simplified.clauses.size() != 1)
    return fail("predicate " + e.predicate);
  // Same accepted set as max >= stus[2].score over an integer grid.
  for (int m = -50; m <= 50; ++m)
    for (int s = -50; s <= 50; ++s)
      if (e.simplified.accepts({double(m), double(s)}) != (m >= s))
        return fail("predicate " + e.predicate + " differs at (" + std::to_string(m) + "," +
                    std::to_string(s) + ")");
  if (dt >= 30.0) return fail("took " + std::to_string(dt) + " s");
  return {true, e.predicate + " at Before statement 8"};
}

// Labels x by "fails iff x < 33".
class ThresholdOracle : public engine::LabelingOracle {
 public:
  std::vector<features::FeatureVector> query(
      const std::vector<engine::FeatureAssignment>& a) override {
    ++queries_;
    features::FeatureVector v;
    v.values = {a.at(0).value};
    v.label = a.at(0).value < 33 ? features::Label::Negative : features::Label::Positive;
    return {v};
  }
};

Outcome convergence_trace() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<features::FeatureDescriptor> f = {
      {interp::AccessPath("x"), features::FeatureKind::Int, 0, true}};
  features::LabeledDataset data(1);
  data.add({{100.0}, features::Label::Positive, features::Origin::Observed, 1});
  data.add({{0.0}, features::Label::Negative, features::Origin::Observed, 2});
  ThresholdOracle oracle;
  engine::Stats stats;
  auto r = engine::classify_with_sampling(data, f, {0}, oracle, {}, stats);
  std::vector<double> seq;
  for (const auto& c : r.history) seq.push_back(c.clauses.at(0).rhs);
  std::string listing;
  for (double v : seq) listing += (listing.empty() ? "" : ", ") + std::to_string(int(v));
  const std::vector<double> want = {50, 25, 38, 32, 35, 34, 33};
  if (!r.converged || seq != want) return fail("sequence " + listing);
  const double dt = seconds_since(t0);
  if (dt >= 1.0) return fail("took " + std::to_string(dt) + " s");
  return {true, "x >= " + listing};
}

Outcome conflict_behavior() {
  auto c = testing::load_corpus("running_example");
  engine::Config config;
  auto loc = engine::localize_failure(c.program, c.tests, config);
  engine::Stats stats;
  auto session = engine::prepare_session(c.program, c.tests, loc,
                                         {kStmt(8), Position::Before}, config, stats);
  if (!session) return fail("no session at Before statement 8");
  std::vector<std::size_t> combo;
  for (const char* name : {"max", "stus[0].ID"}) {
    auto it = std::find_if(session->features.begin(), session->features.end(),
                           [&](const auto& d) { return d.name() == name; });
    if (it == session->features.end()) return fail(std::string("feature missing: ") + name);
    combo.push_back(static_cast<std::size_t>(it - session->features.begin()));
  }
  engine::ProgramOracle oracle(c.program, session->reaching, session->point, session->features);
  auto data = session->observed;
  engine::synthesize_data(data, session->features, combo, oracle, config, stats);
  auto r = engine::classify_with_sampling(data, session->features, combo, oracle, config, stats);
  if (r.classifier) return fail("combination produced a classifier");
  if (r.iterations > 10) return fail(std::to_string(r.iterations) + " iterations");
  auto pos = data.project(features::Label::Positive, combo);
  auto neg = data.project(features::Label::Negative, combo);
  for (const auto& n : neg) {
    if (std::find(pos.begin(), pos.end(), n) != pos.end())
      return {true, "[" + std::to_string(int(n[0])) + "," + std::to_string(int(n[1])) +
                        "] labeled both ways; none after " + std::to_string(r.iterations) +
                        " iterations"};
  }
  return fail("none without a doubly labeled vector");
}

Outcome float_boundary() {
  auto t0 = std::chrono::steady_clock::now();
  auto c = testing::load_corpus("float_rounding");
  auto r = engine::explain(c.program, c.tests, {});
  const double dt = seconds_since(t0);
  if (!r.explanation) return fail("no explanation");
  const auto& clf = r.explanation->simplified;
  if (clf.clauses.size() != 1 || clf.clauses[0].coeffs.size() != 1 ||
      clf.clauses[0].coeffs[0] >= 0)
    return fail("predicate " + r.explanation->predicate);
  const double learned = clf.clauses[0].rhs / clf.clauses[0].coeffs[0];
  const double truth = testing::float_boundary(c.program);
  const bool close = learned == truth || std::nextafter(learned, 0.0) == truth ||
                     std::nextafter(learned, 1.0) == truth;
  char buf[128];
  std::snprintf(buf, sizeof buf, "learned x <= %.17g, adjacent-float search %.17g", learned, truth);
  if (!close) return fail(buf);
  if (dt >= 30.0) return fail("took " + std::to_string(dt) + " s");
  return {true, buf};
}

Outcome property_suites() {
  struct Suite {
    const char* name;
    std::size_t cases;
    std::function<std::string(std::uint64_t)> run;
  };
  std::vector<Suite> suites = {
      {"separator", 1000, testing::check_separator_case},
      {"axis-box conjunction", 500, testing::check_axis_box_case},
      {"slice vs reaching definitions", 500, testing::check_slice_case},
      {"simplify grid", 500, testing::check_simplify_case},
      {"determinism", 50,
       [](std::uint64_t s) {
         const auto names = testing::corpus_names();
         return testing::check_determinism_case(names[s % names.size()], s);
       }},
  };
  std::string summary;
  for (const auto& s : suites) {
    for (std::uint64_t seed = 1; seed <= s.cases; ++seed) {
      std::string err = s.run(seed);
      if (!err.empty())
        return fail(std::string(s.name) + " case " + std::to_string(seed) + ": " + err);
    }
    summary += std::string(summary.empty() ? "" : ", ") + s.name + " " + std::to_string(s.cases);
  }
  return {true, summary};
}

Outcome budget_bound() {
  std::string summary;
  std::size_t extra_runs = 0;
  for (const auto& name : testing::corpus_names()) {
    for (std::size_t m : {0, 3, 8}) {
      auto c = testing::load_corpus(name);
      engine::Config config;
      config.m = m;
      config.seed = 7;
      auto r = engine::explain(c.program, c.tests, config);
      const auto& stats = r.explanation ? r.explanation->stats : r.stats;
      const std::size_t bound = engine::solver_call_bound(stats.candidate_points, config);
      if (stats.solver_calls > bound)
        return fail(name + " m=" + std::to_string(m) + ": " + std::to_string(stats.solver_calls) +
                    " > " + std::to_string(bound));
      if (m != 0) {
        ++extra_runs;
        continue;
      }
      summary += std::string(summary.empty() ? "" : ", ") + name + " " +
                 std::to_string(stats.solver_calls) + "/" + std::to_string(bound);
    }
  }
  return {true, summary + "; plus " + std::to_string(extra_runs) + " runs with generated tests"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"1 Ochiai exactness", ochiai_exactness},
      {"2 candidate points", candidate_points},
      {"3 end-to-end explanation", end_to_end},
      {"4 1-D convergence trace", convergence_trace},
      {"5 conflict behavior", conflict_behavior},
      {"6 float boundary", float_boundary},
      {"7 property suites", property_suites},
      {"8 solver budget bound", budget_bound},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
