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

#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "whyfail/engine/report.hpp"
#include "whyfail/interp/slice.hpp"
#include "whyfail/testgen/generator.hpp"
#include "whyfail/testgen/test_file.hpp"

#ifndef WHYFAIL_CORPUS_DIR
#define WHYFAIL_CORPUS_DIR "corpus"
#endif

namespace whyfail::testing {

namespace {

using Rand = std::mt19937_64;

std::int64_t uniform(Rand& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double uniform_real(Rand& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double dot(const learn::Point& a, const learn::Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::string corpus_dir() { return WHYFAIL_CORPUS_DIR; }

std::vector<std::string> corpus_names() {
  return {"running_example", "off_by_one_max", "missing_case", "float_rounding", "int_overflow"};
}

Corpus load_corpus(const std::string& name) {
  const std::string dir = corpus_dir() + "/" + name;
  auto program = lang::load_program(read_file(dir + "/program.ml5"));
  auto tests = testgen::load_tests(program, dir + "/tests.txt");
  return Corpus{std::move(program), std::move(tests)};
}

LabeledPoints random_separable(std::uint64_t seed, std::size_t count, std::size_t dim) {
  Rand rng(seed);
  const bool grid = seed % 2 == 0;
  for (;;) {
    learn::Point w(dim);
    for (auto& x : w) x = uniform_real(rng, -1.0, 1.0);
    const double norm = std::sqrt(dot(w, w));
    if (norm < 0.1) continue;
    const double b = uniform_real(rng, -2.0, 2.0);
    LabeledPoints out;
    for (int tries = 0; out.positives.size() + out.negatives.size() < count && tries < 10000;
         ++tries) {
      learn::Point p(dim);
      for (auto& x : p)
        x = grid ? static_cast<double>(uniform(rng, -5, 5)) : uniform_real(rng, -10.0, 10.0);
      const double side = (dot(w, p) - b) / norm;
      if (std::fabs(side) < 0.25) continue;
      (side > 0 ? out.positives : out.negatives).push_back(p);
    }
    if (!out.positives.empty() && !out.negatives.empty() &&
        out.positives.size() + out.negatives.size() == count)
      return out;
  }
}

std::optional<double> brute_force_margin(const LabeledPoints& data) {
  std::vector<learn::Point> x;
  std::vector<double> y;
  for (const auto& p : data.positives) x.push_back(p), y.push_back(1.0);
  for (const auto& n : data.negatives) x.push_back(n), y.push_back(-1.0);
  const std::size_t n = x.size();
  const std::size_t dim = x.front().size();

  std::optional<double> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto m = static_cast<std::size_t>(__builtin_popcount(mask));
    if (m < 2 || m > dim + 1) continue;
    std::vector<std::size_t> s;
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      s.push_back(i);
      (y[i] > 0 ? pos : neg) = true;
    }
    if (!pos || !neg) continue;

    // Unknowns: alpha_1..alpha_m, b.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m + 1),
                                              static_cast<Eigen::Index>(m + 1));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      for (std::size_t j = 0; j < m; ++j)
        a(ii, static_cast<Eigen::Index>(j)) = y[s[i]] * y[s[j]] * dot(x[s[i]], x[s[j]]);
      a(ii, static_cast<Eigen::Index>(m)) = -y[s[i]];
      a(static_cast<Eigen::Index>(m), ii) = y[s[i]];
      rhs(ii) = 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) continue;
    Eigen::VectorXd sol = lu.solve(rhs);

    learn::Point w(dim, 0.0);
    bool ok = true;
    for (std::size_t j = 0; j < m; ++j) {
      const double alpha = sol(static_cast<Eigen::Index>(j));
      if (alpha < -1e-9) ok = false;
      for (std::size_t k = 0; k < dim; ++k) w[k] += alpha * y[s[j]] * x[s[j]][k];
    }
    if (!ok) continue;
    const double b = sol(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < n && ok; ++i)
      if (y[i] * (dot(w, x[i]) - b) < 1.0 - 1e-7) ok = false;
    if (!ok) continue;
    const double margin = 1.0 / std::sqrt(dot(w, w));
    if (!best || margin > *best) best = margin;
  }
  return best;
}

std::string check_separator_case(std::uint64_t seed) {
  Rand rng(seed);
  const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
  const auto count = static_cast<std::size_t>(uniform(rng, 2, 12));
  auto data = random_separable(seed * 7919 + 13, count, dim);
  auto h = learn::max_margin_separator(data.positives, data.negatives);
  if (!h) return "no separator found for a separable set";
  for (const auto& p : data.positives)
    if (!h->accepts(p)) return "a positive point is rejected";
  for (const auto& n : data.negatives)
    if (h->accepts(n)) return "a negative point is accepted";
  auto best = brute_force_margin(data);
  if (!best) return "reference found no feasible support set";
  const double got = learn::margin(*h, data.positives, data.negatives);
  if (std::fabs(got - *best) > 1e-6 * *best)
    return "margin " + std::to_string(got) + " vs optimum " + std::to_string(*best);
  return {};
}

LabeledPoints random_axis_box(std::uint64_t seed) {
  Rand rng(seed);
  for (;;) {
    const auto dim = static_cast<std::size_t>(uniform(rng, 2, 3));
    std::vector<std::int64_t> lo(dim), hi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = uniform(rng, -5, 2);
      hi[i] = lo[i] + uniform(rng, 1, 6);
    }
    // Faces 2i (x_i >= lo_i) and 2i+1 (x_i <= hi_i).
    std::vector<std::size_t> faces(2 * dim);
    std::iota(faces.begin(), faces.end(), 0);
    std::shuffle(faces.begin(), faces.end(), rng);
    faces.resize(static_cast<std::size_t>(uniform(rng, 1, 3)));
    auto inside = [&](const learn::Point& p) {
      for (std::size_t f : faces) {
        const std::size_t i = f / 2;
        if (f % 2 == 0 && p[i] < static_cast<double>(lo[i])) return false;
        if (f % 2 == 1 && p[i] > static_cast<double>(hi[i])) return false;
      }
      return true;
    };
    LabeledPoints out;
    const auto want_p = static_cast<std::size_t>(uniform(rng, 1, 8));
    const auto want_n = static_cast<std::size_t>(uniform(rng, 1, 8));
    for (int tries = 0; tries < 5000 && (out.positives.size() < want_p ||
                                         out.negatives.size() < want_n);
         ++tries) {
      learn::Point p(dim);
      for (auto& x : p) x = static_cast<double>(uniform(rng, -8, 8));
      if (inside(p)) {
        if (out.positives.size() < want_p) out.positives.push_back(p);
      } else if (out.negatives.size() < want_n) {
        out.negatives.push_back(p);
      }
    }
    if (!out.positives.empty() && !out.negatives.empty()) return out;
  }
}

std::string check_axis_box_case(std::uint64_t seed) {
  auto data = random_axis_box(seed);
  auto c = learn::conjunctive_classifier(data.positives, data.negatives);
  if (!c) return "no conjunction found";
  for (const auto& p : data.positives)
    if (!c->accepts(p)) return "a positive point is rejected";
  for (const auto& n : data.negatives)
    if (c->accepts(n)) return "a negative point is accepted";
  if (c->clauses.size() > data.negatives.size()) return "more clauses than negatives";
  return {};
}

StraightLine random_straight_line(std::uint64_t seed) {
  Rand rng(seed);
  StraightLine out;
  std::vector<std::string> vars = {"a", "b", "c"};
  // defs[k]: variable defined by statement k; uses[k]: variables it reads.
  std::vector<std::string> defs;
  std::vector<std::vector<std::string>> uses;
  std::ostringstream body;

  auto operand = [&](std::vector<std::string>& used) {
    if (uniform(rng, 0, 4) == 0) return std::to_string(uniform(rng, -9, 9));
    const auto& v = vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(vars.size()) - 1))];
    used.push_back(v);
    return v;
  };
  const char* ops[] = {"+", "-", "*"};

  const auto count = uniform(rng, 3, 10);
  std::size_t declared = 0;
  for (std::int64_t k = 0; k < count; ++k) {
    std::vector<std::string> used;
    std::string lhs = operand(used);
    std::string rhs = operand(used);
    std::string expr = lhs + " " + ops[uniform(rng, 0, 2)] + " " + rhs;
    if (declared > 0 && uniform(rng, 0, 2) == 0) {
      std::string target = "v" + std::to_string(uniform(rng, 0, static_cast<std::int64_t>(declared) - 1));
      body << "  " << target << " = " << expr << ";\n";
      defs.push_back(target);
    } else {
      std::string target = "v" + std::to_string(declared++);
      body << "  int " << target << " = " << expr << ";\n";
      defs.push_back(target);
      vars.push_back(target);
    }
    uses.push_back(used);
  }
  std::vector<std::string> used;
  std::string x = operand(used);
  std::string y = operand(used);
  body << "  assert " << x << " < " << y << ";\n";

  // Backward pass over last definitions.
  const std::size_t assertion = defs.size();
  out.expected_slice.insert(assertion);
  std::set<std::string> needed(used.begin(), used.end());
  for (std::size_t k = defs.size(); k-- > 0;) {
    if (!needed.count(defs[k])) continue;
    out.expected_slice.insert(k);
    needed.erase(defs[k]);
    needed.insert(uses[k].begin(), uses[k].end());
  }

  out.source = "entry fn f(int a, int b, int c) {\n" + body.str() + "}\n";
  for (int i = 0; i < 3; ++i) out.args.push_back(uniform(rng, -100, 100));
  return out;
}

std::string check_slice_case(std::uint64_t seed) {
  auto sl = random_straight_line(seed);
  auto program = lang::load_program(sl.source);
  interp::TestCase t;
  t.id = 1;
  for (auto v : sl.args) t.args.push_back(v);
  auto r = interp::execute(program, t);
  if (!r.assertion_event) return "assertion not evaluated";
  auto slice = interp::dynamic_slice(r.trace, *r.assertion_event);
  if (slice.statements != sl.expected_slice) return "slice differs for:\n" + sl.source;
  return {};
}

std::string check_simplify_case(std::uint64_t seed) {
  Rand rng(seed);
  const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
  std::vector<std::int64_t> a(dim);
  do {
    for (auto& v : a) v = uniform(rng, -5, 5);
  } while (std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; }));
  const std::int64_t p = uniform(rng, -20, 20);
  const std::int64_t q = uniform(rng, 1, 7);
  const double scale = uniform_real(rng, 0.01, 100.0);

  learn::HalfSpace h;
  for (auto v : a) h.coeffs.push_back(static_cast<double>(v) * scale);
  h.rhs = static_cast<double>(p) / static_cast<double>(q) * scale;
  learn::Classifier c{{h}, {}, {}};
  for (std::size_t i = 0; i < dim; ++i) c.features.push_back(i);
  auto s = learn::simplify(c, std::vector<bool>(dim, true));
  if (!s.unsimplified.empty()) return "clause left unsimplified";
  const auto& hs = s.clauses.front();
  std::int64_t g = 0;
  for (double v : hs.coeffs) {
    if (v != std::round(v)) return "non-integer coefficient";
    g = std::gcd(g, static_cast<std::int64_t>(v));
  }
  if (g != 1) return "coefficients share a factor";

  std::vector<std::int64_t> x(dim, -6);
  for (;;) {
    std::int64_t lhs = 0;
    learn::Point pt;
    for (std::size_t i = 0; i < dim; ++i) {
      lhs += a[i] * x[i];
      pt.push_back(static_cast<double>(x[i]));
    }
    const bool expected = q * lhs >= p;
    if (hs.accepts(pt) != expected) return "accepted sets differ";
    std::size_t i = 0;
    while (i < dim && x[i] == 6) x[i++] = -6;
    if (i == dim) break;
    ++x[i];
  }
  return {};
}

std::string check_determinism_case(const std::string& corpus, std::uint64_t seed) {
  auto c = load_corpus(corpus);
  engine::Config config;
  config.m = 2 + seed % 4;
  config.seed = seed;
  auto once = [&]() {
    std::string out;
    out += testgen::format_tests(testgen::generate_tests(c.program, config.m, config.seed));
    auto tests = engine::assemble_tests(c.program, c.tests, config);
    auto suite = testgen::run_suite(c.program, tests);
    out += engine::suite_json(tests, suite).dump();
    auto loc = engine::localize_failure(c.program, tests, config);
    out += engine::localize_json(c.program, loc).dump();
    out += engine::explain_json(c.program, engine::explain(c.program, c.tests, config)).dump();
    return out;
  };
  if (once() != once()) return "outputs differ between runs";
  return {};
}

double float_boundary(const lang::TypedProgram& program) {
  double x = 0.5;
  for (;;) {
    x = std::nextafter(x, 0.0);
    interp::TestCase t;
    t.args = {x};
    if (interp::execute(program, t).verdict == interp::Verdict::Pass) return x;
  }
}

}  // namespace whyfail::testing
