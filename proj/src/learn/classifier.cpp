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

#include "whyfail/learn/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "whyfail/lang/value.hpp"

namespace whyfail::learn {

double HalfSpace::evaluate(const Point& v) const {
  if (v.size() != coeffs.size()) throw WidthMismatch();
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += coeffs[i] * v[i];
  return s - rhs;
}

bool HalfSpace::accepts(const Point& v) const { return evaluate(v) >= 0.0; }

HalfSpace HalfSpace::normalized() const {
  double norm = 0.0;
  for (double c : coeffs) norm += c * c;
  norm = std::sqrt(norm);
  if (norm == 0.0) return *this;
  HalfSpace h;
  for (double c : coeffs) h.coeffs.push_back(c / norm);
  h.rhs = rhs / norm;
  return h;
}

bool Classifier::accepts(const Point& v) const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const HalfSpace& h) { return h.accepts(v); });
}

std::optional<Classifier> conjunctive_classifier(const std::vector<Point>& positives,
                                                 const std::vector<Point>& negatives,
                                                 std::chrono::milliseconds budget) {
  if (positives.empty() || negatives.empty()) return std::nullopt;
  for (const auto& n : negatives)
    if (std::find(positives.begin(), positives.end(), n) != positives.end()) return std::nullopt;

  Classifier out;
  if (auto h = max_margin_separator(positives, negatives, budget)) {
    out.clauses.push_back(*h);
    return out;
  }
  std::vector<Point> remaining = negatives;
  while (!remaining.empty()) {
    auto h = max_margin_separator(positives, {remaining.front()}, budget);
    if (!h) return std::nullopt;
    out.clauses.push_back(*h);
    std::erase_if(remaining, [&](const Point& p) { return !h->accepts(p); });
  }
  return out;
}

std::optional<HalfSpace> threshold_1d(const std::vector<double>& positives,
                                      const std::vector<double>& negatives, bool integral) {
  if (positives.empty() || negatives.empty()) return std::nullopt;
  const auto [min_p, max_p] = std::minmax_element(positives.begin(), positives.end());
  const auto [min_n, max_n] = std::minmax_element(negatives.begin(), negatives.end());
  auto midpoint = [](double a, double b) { return a / 2.0 + b / 2.0; };

  if (*max_n < *min_p) {
    // x >= c with max_n < c <= min_p.
    double c = midpoint(*max_n, *min_p);
    if (integral) c = std::ceil(c);
    if (c <= *max_n || c > *min_p) c = *min_p;
    return HalfSpace{{1.0}, c};
  }
  if (*max_p < *min_n) {
    // x <= c with max_p <= c < min_n.
    double c = midpoint(*max_p, *min_n);
    if (integral) c = std::floor(c);
    if (c >= *min_n || c < *max_p) c = *max_p;
    return HalfSpace{{-1.0}, -c};
  }
  return std::nullopt;
}

namespace {

struct Fraction {
  long long num;
  long long den;
};

// Best continued-fraction convergent within `tol`, denominators up to max_den.
std::optional<Fraction> rationalize(double a, long long max_den, double tol) {
  const bool negative = a < 0.0;
  const double target = std::fabs(a);
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = target;
  for (int step = 0; step < 64; ++step) {
    const double whole = std::floor(x);
    if (whole > 1e15) break;
    const auto ai = static_cast<long long>(whole);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::fabs(target - static_cast<double>(h1) / static_cast<double>(k1)) <= tol)
      return Fraction{negative ? -h1 : h1, k1};
    const double frac = x - whole;
    if (frac <= 0.0) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

bool near_integer(double v) {
  return std::fabs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::fabs(v));
}

std::string number(double v, bool exact) {
  if (near_integer(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", std::round(v) == 0.0 ? 0.0 : std::round(v));
    return buf;
  }
  if (exact) return lang::format_double(v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Classifier simplify(const Classifier& c, const std::vector<bool>& integral) {
  Classifier out = c;
  out.unsimplified.clear();
  for (std::size_t k = 0; k < c.clauses.size(); ++k) {
    const HalfSpace& h = c.clauses[k];
    double top = 0.0;
    for (double a : h.coeffs) top = std::max(top, std::fabs(a));
    std::vector<Fraction> fracs;
    bool ok = top > 0.0 && std::isfinite(top);
    for (std::size_t i = 0; ok && i < h.coeffs.size(); ++i) {
      auto f = rationalize(h.coeffs[i] / top, 1000, 1e-9);
      if (f)
        fracs.push_back(*f);
      else
        ok = false;
    }
    if (!ok) {
      out.unsimplified.push_back(k);
      continue;
    }
    long long lcm = 1;
    for (const auto& f : fracs) lcm = std::lcm(lcm, f.den);
    std::vector<long long> ints;
    long long gcd = 0;
    for (const auto& f : fracs) {
      ints.push_back(f.num * (lcm / f.den));
      gcd = std::gcd(gcd, ints.back());
    }
    HalfSpace s;
    for (long long v : ints) s.coeffs.push_back(static_cast<double>(v / gcd));
    s.rhs = h.rhs / top * static_cast<double>(lcm) / static_cast<double>(gcd);

    bool all_integral = true;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i)
      if (i >= integral.size() || !integral[i]) all_integral = false;
    if (all_integral) s.rhs = near_integer(s.rhs) ? std::round(s.rhs) : std::ceil(s.rhs);
    if (s.rhs == 0.0) s.rhs = 0.0;  // drop negative zero
    out.clauses[k] = s;
  }
  return out;
}

bool equivalent(const HalfSpace& a, const HalfSpace& b, double tolerance) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  HalfSpace x = a.normalized(), y = b.normalized();
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (std::fabs(x.coeffs[i] - y.coeffs[i]) > tolerance) return false;
  return std::fabs(x.rhs - y.rhs) <= tolerance;
}

bool equivalent(const Classifier& a, const Classifier& b, double tolerance) {
  if (a.features != b.features || a.clauses.size() != b.clauses.size()) return false;
  for (std::size_t k = 0; k < a.clauses.size(); ++k)
    if (!equivalent(a.clauses[k], b.clauses[k], tolerance)) return false;
  return true;
}

std::string pretty(const HalfSpace& h, const std::vector<std::string>& names) {
  bool exact = std::all_of(h.coeffs.begin(), h.coeffs.end(), near_integer);
  auto term = [&](double a, std::size_t i) {
    std::string mag = number(std::fabs(a), exact);
    return (mag == "1" ? "" : mag + "*") + names.at(i);
  };
  std::vector<std::string> left, right;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
    if (h.coeffs[i] > 0) left.push_back(term(h.coeffs[i], i));
    if (h.coeffs[i] < 0) right.push_back(term(h.coeffs[i], i));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
    return s;
  };
  if (left.empty()) return join(right) + " ≤ " + number(-h.rhs, exact);
  std::string rhs = join(right);
  if (rhs.empty())
    rhs = number(h.rhs, exact);
  else if (h.rhs > 0)
    rhs += " + " + number(h.rhs, exact);
  else if (h.rhs < 0)
    rhs += " - " + number(-h.rhs, exact);
  return join(left) + " ≥ " + rhs;
}

std::string pretty(const Classifier& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < c.clauses.size(); ++k)
    out += (k ? " ∧ " : "") + pretty(c.clauses[k], names);
  return out;
}

}  // namespace whyfail::learn
