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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "whyfail/learn/classifier.hpp"

// The max-margin direction is the minimum-norm point of the Minkowski
// difference conv(P) - conv(N). It is found with Wolfe's algorithm; vertices
// of the difference are pairs (p_i, n_j), so the set is never materialized.

namespace whyfail::learn {

namespace {

using Vec = Eigen::VectorXd;

Vec to_vec(const Point& p) { return Eigen::Map<const Vec>(p.data(), static_cast<Eigen::Index>(p.size())); }

struct Corral {
  std::vector<std::pair<std::size_t, std::size_t>> ids;
  std::vector<Vec> points;
  std::vector<double> weights;
};

// Minimum-norm point of the affine hull of `s`, as affine weights.
std::vector<double> affine_minimizer(const std::vector<Vec>& s) {
  const std::size_t m = s.size();
  if (m == 1) return {1.0};
  Eigen::MatrixXd b(s[0].size(), static_cast<Eigen::Index>(m - 1));
  for (std::size_t k = 1; k < m; ++k) b.col(static_cast<Eigen::Index>(k - 1)) = s[k] - s[0];
  Vec beta = b.colPivHouseholderQr().solve(-s[0]);
  std::vector<double> alpha(m);
  double rest = 1.0;
  for (std::size_t k = 1; k < m; ++k) {
    alpha[k] = beta(static_cast<Eigen::Index>(k - 1));
    rest -= alpha[k];
  }
  alpha[0] = rest;
  return alpha;
}

Vec combine(const std::vector<Vec>& s, const std::vector<double>& w) {
  Vec x = Vec::Zero(s[0].size());
  for (std::size_t k = 0; k < s.size(); ++k) x += w[k] * s[k];
  return x;
}

void check_width(const std::vector<Point>& a, std::size_t width) {
  for (const auto& p : a)
    if (p.size() != width) throw WidthMismatch();
}

}  // namespace

double margin(const HalfSpace& h, const std::vector<Point>& positives,
              const std::vector<Point>& negatives) {
  double norm = 0.0;
  for (double c : h.coeffs) norm += c * c;
  norm = std::sqrt(norm);
  double min_p = std::numeric_limits<double>::infinity();
  double max_n = -std::numeric_limits<double>::infinity();
  for (const auto& p : positives) min_p = std::min(min_p, h.evaluate(p));
  for (const auto& n : negatives) max_n = std::max(max_n, h.evaluate(n));
  return std::min(min_p, -max_n) / norm;
}

std::optional<HalfSpace> max_margin_separator(const std::vector<Point>& positives,
                                              const std::vector<Point>& negatives,
                                              std::chrono::milliseconds budget) {
  if (positives.empty() || negatives.empty()) return std::nullopt;
  const std::size_t d = positives.front().size();
  check_width(positives, d);
  check_width(negatives, d);
  if (d == 0) return std::nullopt;

  const auto deadline = std::chrono::steady_clock::now() + budget;
  std::vector<Vec> p, n;
  for (const auto& v : positives) p.push_back(to_vec(v));
  for (const auto& v : negatives) n.push_back(to_vec(v));

  Corral c;
  c.ids.push_back({0, 0});
  c.points.push_back(p[0] - n[0]);
  c.weights.push_back(1.0);
  Vec x = c.points[0];

  constexpr double kEps = 1e-12;
  const std::size_t max_major = 10000 + 50 * (p.size() + n.size());
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= max_major || std::chrono::steady_clock::now() > deadline) return std::nullopt;

    std::size_t bi = 0, bj = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (double v = x.dot(p[i]); v < lo) lo = v, bi = i;
    for (std::size_t j = 0; j < n.size(); ++j)
      if (double v = x.dot(n[j]); v > hi) hi = v, bj = j;
    Vec v = p[bi] - n[bj];

    double scale = v.squaredNorm();
    for (const auto& s : c.points) scale = std::max(scale, s.squaredNorm());
    const double xx = x.squaredNorm();
    if (xx <= kEps * kEps * scale) return std::nullopt;  // hulls intersect
    if (xx - x.dot(v) <= kEps * scale) break;
    if (std::find(c.ids.begin(), c.ids.end(), std::make_pair(bi, bj)) != c.ids.end()) break;

    c.ids.push_back({bi, bj});
    c.points.push_back(v);
    c.weights.push_back(0.0);

    for (std::size_t minor = 0;; ++minor) {
      if (minor > 10 * (d + 2)) return std::nullopt;
      std::vector<double> alpha = affine_minimizer(c.points);
      bool interior = std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > 0.0; });
      if (interior) {
        c.weights = alpha;
        x = combine(c.points, alpha);
        break;
      }
      // Step toward the affine minimizer until a weight hits zero.
      double theta = 1.0;
      for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k] <= 0.0)
          theta = std::min(theta, c.weights[k] / (c.weights[k] - alpha[k]));
      for (std::size_t k = 0; k < alpha.size(); ++k)
        c.weights[k] = theta * alpha[k] + (1.0 - theta) * c.weights[k];
      Corral kept;
      for (std::size_t k = 0; k < c.points.size(); ++k) {
        if (c.weights[k] <= 1e-15) continue;
        kept.ids.push_back(c.ids[k]);
        kept.points.push_back(c.points[k]);
        kept.weights.push_back(c.weights[k]);
      }
      if (kept.points.empty() || kept.points.size() == c.points.size()) {
        // Numerical stall: keep the single best vertex.
        std::size_t best = static_cast<std::size_t>(
            std::max_element(c.weights.begin(), c.weights.end()) - c.weights.begin());
        kept = Corral{{c.ids[best]}, {c.points[best]}, {1.0}};
      }
      double total = 0.0;
      for (double w : kept.weights) total += w;
      for (double& w : kept.weights) w /= total;
      c = std::move(kept);
      x = combine(c.points, c.weights);
    }
  }

  HalfSpace h;
  h.coeffs.assign(x.data(), x.data() + x.size());
  double min_p = std::numeric_limits<double>::infinity();
  double max_n = -std::numeric_limits<double>::infinity();
  for (const auto& v : p) min_p = std::min(min_p, x.dot(v));
  for (const auto& v : n) max_n = std::max(max_n, x.dot(v));
  if (!(min_p > max_n)) return std::nullopt;
  h.rhs = max_n + (min_p - max_n) / 2.0;
  h = h.normalized();
  for (const auto& v : positives)
    if (!h.accepts(v)) return std::nullopt;
  for (const auto& v : negatives)
    if (h.accepts(v)) return std::nullopt;
  return h;
}

}  // namespace whyfail::learn
