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

#include "whyfail/engine/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "whyfail/features/features.hpp"
#include "whyfail/interp/slice.hpp"
#include "whyfail/testgen/suite.hpp"

namespace whyfail::engine {

using features::FeatureDescriptor;
using features::FeatureVector;
using features::Label;
using features::LabeledDataset;
using features::Origin;

void Config::validate() const {
  if (!(x_threshold >= 0.0 && x_threshold <= 1.0))
    throw std::invalid_argument("X must lie in [0, 1]");
  if (k < 1 || k > n) throw std::invalid_argument("K must satisfy 1 <= K <= N");
  if (max_clauses < 1) throw std::invalid_argument("max_clauses must be at least 1");
  if (max_points < 1) throw std::invalid_argument("max_points must be at least 1");
  if (iteration_cap < 1) throw std::invalid_argument("iteration cap must be at least 1");
  if (synthesis_cap < 1) throw std::invalid_argument("synthesis cap must be at least 1");
}

namespace {

// Saturating product of the value-list sizes.
std::size_t product_size(const std::vector<std::vector<double>>& lists) {
  std::size_t total = 1;
  for (const auto& l : lists) {
    if (l.empty()) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / l.size())
      return std::numeric_limits<std::size_t>::max();
    total *= l.size();
  }
  return total;
}

std::size_t add_all(LabeledDataset& data, std::vector<FeatureVector> vectors, Origin origin) {
  std::size_t added = 0;
  for (auto& v : vectors) {
    v.origin = origin;
    added += data.add(std::move(v)) ? 1 : 0;
  }
  return added;
}

std::optional<learn::Classifier> learn_once(const LabeledDataset& data,
                                            const std::vector<FeatureDescriptor>& features,
                                            const std::vector<std::size_t>& combo,
                                            const Config& config, Stats& stats) {
  auto positives = data.project(Label::Positive, combo);
  auto negatives = data.project(Label::Negative, combo);
  ++stats.solver_calls;
  std::optional<learn::Classifier> out;
  if (combo.size() == 1) {
    std::vector<double> p, n;
    for (const auto& v : positives) p.push_back(v[0]);
    for (const auto& v : negatives) n.push_back(v[0]);
    if (auto h = learn::threshold_1d(p, n, features.at(combo[0]).integral()))
      out = learn::Classifier{{*h}, {}, {}};
  } else {
    out = learn::conjunctive_classifier(positives, negatives, config.solver_budget);
  }
  if (out) out->features = combo;
  return out;
}

std::vector<bool> integral_mask(const std::vector<FeatureDescriptor>& features,
                                const std::vector<std::size_t>& combo) {
  std::vector<bool> out;
  for (std::size_t f : combo) out.push_back(features.at(f).integral());
  return out;
}

bool same_classifier(const learn::Classifier& a, const learn::Classifier& b,
                     const std::vector<FeatureDescriptor>& features) {
  if (a.features.size() == 1) {
    if (a.clauses.size() != b.clauses.size()) return false;
    for (std::size_t k = 0; k < a.clauses.size(); ++k)
      if (a.clauses[k].coeffs != b.clauses[k].coeffs || a.clauses[k].rhs != b.clauses[k].rhs)
        return false;
    return true;
  }
  if (learn::equivalent(a, b)) return true;
  const auto mask = integral_mask(features, a.features);
  auto sa = learn::simplify(a, mask), sb = learn::simplify(b, mask);
  if (!sa.unsimplified.empty() || !sb.unsimplified.empty()) return false;
  if (sa.clauses.size() != sb.clauses.size()) return false;
  for (std::size_t k = 0; k < sa.clauses.size(); ++k)
    if (sa.clauses[k].coeffs != sb.clauses[k].coeffs || sa.clauses[k].rhs != sb.clauses[k].rhs)
      return false;
  return true;
}

// Points on the boundary of each clause, in combo coordinates.
std::vector<std::vector<double>> boundary_samples(const learn::Classifier& clf,
                                                  const LabeledDataset& data,
                                                  const std::vector<FeatureDescriptor>& features,
                                                  const std::vector<std::size_t>& combo) {
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> writable_integral;
  for (std::size_t j = 0; j < combo.size(); ++j)
    if (features[combo[j]].writable && features[combo[j]].integral()) writable_integral.push_back(j);

  if (combo.size() == 1) {
    if (!features[combo[0]].writable) return out;
    for (const auto& h : clf.clauses) out.push_back({h.rhs / h.coeffs[0]});
    return out;
  }

  auto project = [&](const FeatureVector& v) {
    std::vector<double> p;
    for (std::size_t f : combo) p.push_back(v.values[f]);
    return p;
  };
  std::optional<std::vector<double>> tmpl;
  const auto& vs = data.vectors();
  for (auto it = vs.rbegin(); it != vs.rend() && !tmpl; ++it)
    if (it->label == Label::Negative) tmpl = project(*it);
  for (auto it = vs.rbegin(); it != vs.rend() && !tmpl; ++it) tmpl = project(*it);
  if (!tmpl) return out;

  for (const auto& h : clf.clauses) {
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < combo.size(); ++j)
      if (features[combo[j]].writable && h.coeffs[j] != 0.0) free.push_back(j);
    std::stable_sort(free.begin(), free.end(), [&](std::size_t a, std::size_t b) {
      return std::fabs(h.coeffs[a]) > std::fabs(h.coeffs[b]);
    });
    if (free.size() > 2) free.resize(2);
    for (std::size_t f : free) {
      double rest = h.rhs;
      for (std::size_t j = 0; j < combo.size(); ++j)
        if (j != f) rest -= h.coeffs[j] * (*tmpl)[j];
      double v = rest / h.coeffs[f];
      if (features[combo[f]].integral()) v = std::round(v);
      if (!std::isfinite(v)) continue;
      std::vector<double> s = *tmpl;
      s[f] = v;
      out.push_back(s);
      for (std::size_t j : writable_integral) {
        for (double delta : {-1.0, 1.0}) {
          std::vector<double> nb = s;
          nb[j] += delta;
          out.push_back(nb);
        }
      }
    }
  }
  return out;
}

}  // namespace

void synthesize_data(LabeledDataset& data, const std::vector<FeatureDescriptor>& features,
                     const std::vector<std::size_t>& combo, LabelingOracle& oracle,
                     const Config& config, Stats& stats) {
  std::vector<std::size_t> writable;
  std::vector<std::vector<double>> values;
  for (std::size_t f : combo) {
    if (!features.at(f).writable) continue;
    std::vector<double> seen;
    for (const auto& v : data.vectors()) seen.push_back(v.values[f]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    writable.push_back(f);
    values.push_back(std::move(seen));
  }
  if (writable.empty()) return;

  const std::size_t total = product_size(values);
  std::vector<std::size_t> picks;
  if (total <= config.synthesis_cap) {
    for (std::size_t i = 0; i < total; ++i) picks.push_back(i);
  } else {
    testgen::Rng rng(config.seed);
    std::set<std::size_t> chosen;
    while (chosen.size() < config.synthesis_cap) chosen.insert(rng.below(total));
    picks.assign(chosen.begin(), chosen.end());
  }

  for (std::size_t index : picks) {
    std::vector<FeatureAssignment> assignments(writable.size());
    for (std::size_t j = writable.size(); j-- > 0;) {
      assignments[j] = {writable[j], values[j][index % values[j].size()]};
      index /= values[j].size();
    }
    stats.synthesized += add_all(data, oracle.query(assignments), Origin::Synthesized);
  }
}

SamplingResult classify_with_sampling(LabeledDataset& data,
                                      const std::vector<FeatureDescriptor>& features,
                                      const std::vector<std::size_t>& combo,
                                      LabelingOracle& oracle, const Config& config, Stats& stats) {
  SamplingResult out;
  auto current = learn_once(data, features, combo, config, stats);
  if (!current) return out;
  out.history.push_back(*current);

  std::set<std::vector<FeatureAssignment>> queried;
  for (std::size_t iter = 1; iter <= config.iteration_cap; ++iter) {
    out.iterations = iter;
    for (const auto& s : boundary_samples(*current, data, features, combo)) {
      std::vector<FeatureAssignment> assignments;
      for (std::size_t j = 0; j < combo.size(); ++j)
        if (features[combo[j]].writable) assignments.push_back({combo[j], s[j]});
      if (assignments.empty() || !queried.insert(assignments).second) continue;
      stats.sampled += add_all(data, oracle.query(assignments), Origin::Sampled);
    }
    auto next = learn_once(data, features, combo, config, stats);
    if (!next) return out;
    if (same_classifier(*current, *next, features)) {
      out.classifier = std::move(next);
      out.converged = true;
      return out;
    }
    out.history.push_back(*next);
    current = std::move(next);
  }
  out.classifier = std::move(current);
  return out;
}

std::vector<interp::TestCase> assemble_tests(const lang::TypedProgram& program,
                                             const std::vector<interp::TestCase>& given,
                                             const Config& config) {
  std::vector<interp::TestCase> tests = given;
  for (auto& t : testgen::generate_tests(program, config.m, config.seed, config.generation))
    tests.push_back(std::move(t));
  for (std::size_t i = 0; i < tests.size(); ++i) tests[i].id = i + 1;
  return tests;
}

std::size_t solver_call_bound(std::size_t points, const Config& config) {
  // C(N+K-1, K) combinations per point, each with at most 1 + cap calls.
  double c = 1.0;
  for (std::size_t i = 1; i <= config.k; ++i)
    c = c * static_cast<double>(config.n + config.k - 1 - config.k + i) / static_cast<double>(i);
  double bound = static_cast<double>(points) * std::round(c) *
                 static_cast<double>(1 + config.iteration_cap);
  if (bound >= static_cast<double>(std::numeric_limits<std::size_t>::max()))
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(bound);
}

namespace {

bool classifies_all(const learn::Classifier& clf, const LabeledDataset& data) {
  for (const auto& v : data.vectors()) {
    std::vector<double> p;
    for (std::size_t f : clf.features) p.push_back(v.values[f]);
    if (clf.accepts(p) != (v.label == Label::Positive)) return false;
  }
  return true;
}

}  // namespace

Localization localize_failure(const lang::TypedProgram& program,
                              const std::vector<interp::TestCase>& tests, const Config& config) {
  Localization out;
  out.suite = testgen::run_suite(program, tests);
  if (out.suite.failed.empty()) throw localize::NoFailingTest();
  out.failing_index = out.suite.failed.front();
  const auto& failing = out.suite.results[out.failing_index];
  out.slice = interp::dynamic_slice(failing.trace, *failing.assertion_event);
  out.scores = localize::ochiai_scores(out.suite, out.slice.statements);
  out.points = localize::candidate_points(program, out.slice.statements, out.scores, failing,
                                          config.x_threshold, config.max_points);
  return out;
}

std::optional<Session> prepare_session(const lang::TypedProgram& program,
                                       const std::vector<interp::TestCase>& tests,
                                       const Localization& loc,
                                       const interp::ObservationPoint& point, const Config& config,
                                       Stats& stats) {
  const auto& failing = loc.suite.results[loc.failing_index];
  interp::ExecOptions capture;
  capture.capture_at = {point};
  capture.record_trace = false;

  Session out;
  out.point = point;
  std::vector<interp::ProgramState> states;
  std::vector<interp::Verdict> verdicts;
  std::vector<std::size_t> ids;
  std::optional<interp::ProgramState> failing_state;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    auto r = interp::execute(program, tests[i], capture);
    ++stats.program_runs;
    auto it = r.captures.find(point);
    if (it == r.captures.end()) continue;
    out.reaching.push_back(tests[i]);
    if (i == loc.failing_index) failing_state = it->second;
    if (r.verdict == interp::Verdict::Irrelevant) continue;
    states.push_back(it->second);
    verdicts.push_back(r.verdict);
    ids.push_back(tests[i].id);
  }
  if (!failing_state) return std::nullopt;

  auto roots = interp::relevant_variables_at(failing.trace, loc.slice, *failing_state);
  if (roots.empty()) return std::nullopt;
  try {
    out.features = features::prioritize(features::common_features(states, roots), failing.trace,
                                        *failing_state, config.n);
  } catch (const features::NoCommonFeatures&) {
    return std::nullopt;
  }

  out.observed = LabeledDataset(out.features.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    FeatureVector v;
    v.values = *features::read_features(states[i], out.features);
    v.label = verdicts[i] == interp::Verdict::Pass ? Label::Positive : Label::Negative;
    v.test_id = ids[i];
    out.observed.add(std::move(v));
  }
  return out;
}

ExplainResult explain(const lang::TypedProgram& program,
                      const std::vector<interp::TestCase>& given, const Config& config) {
  config.validate();
  ExplainResult result;
  Stats& stats = result.stats;

  const auto tests = assemble_tests(program, given, config);
  stats.tests = tests.size();
  const auto loc = localize_failure(program, tests, config);
  stats.program_runs += tests.size();
  if (loc.suite.passed.empty()) throw NoPassingTest();
  result.points = loc.points;
  stats.candidate_points = result.points.size();

  for (const auto& candidate : result.points) {
    const auto point = candidate.point;
    ++stats.points_tried;

    auto prepared = prepare_session(program, tests, loc, point, config, stats);
    if (!prepared) continue;
    const auto& session = prepared->features;
    const auto& observed = prepared->observed;
    stats.observed += observed.size();
    if (observed.count(Label::Positive) == 0 || observed.count(Label::Negative) == 0) continue;

    ProgramOracle oracle(program, prepared->reaching, point, session);
    for (const auto& combo : features::combinations(session.size(), config.k)) {
      ++stats.combinations_tried;
      LabeledDataset data = observed;
      synthesize_data(data, session, combo, oracle, config, stats);
      auto sampled = classify_with_sampling(data, session, combo, oracle, config, stats);
      Attempt attempt{point, {}, "explained", sampled.iterations, {}};
      for (std::size_t f : combo) attempt.features.push_back(session[f].name());
      if (sampled.classifier) attempt.classifier = learn::pretty(*sampled.classifier, attempt.features);
      if (!sampled.classifier)
        attempt.outcome = "no classifier";
      else if (!sampled.converged)
        attempt.outcome = "not converged";
      else if (sampled.classifier->clauses.size() > config.max_clauses ||
               !classifies_all(*sampled.classifier, data))
        attempt.outcome = "too many clauses";
      result.attempts.push_back(attempt);
      if (attempt.outcome != "explained") continue;
      const auto& clf = *sampled.classifier;

      Explanation e;
      e.point = point;
      e.line = static_cast<std::size_t>(program.statement(point.ordinal).loc.line);
      for (std::size_t f : combo) e.feature_names.push_back(session[f].name());
      e.learned = clf;
      e.simplified = learn::simplify(clf, integral_mask(session, combo));
      e.predicate = learn::pretty(e.simplified, e.feature_names);
      e.narrative = "assertion failure occurs iff " + e.predicate + " is violated at " +
                    interp::describe(program, point);
      stats.program_runs += oracle.runs();
      stats.oracle_queries += oracle.queries();
      e.stats = stats;
      result.explanation = std::move(e);
      return result;
    }
    stats.oracle_queries += oracle.queries();
    stats.program_runs += oracle.runs();
  }
  return result;
}

}  // namespace whyfail::engine
