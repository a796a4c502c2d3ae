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
#include <random>
#include <vector>

#include "whyfail/interp/interpreter.hpp"
#include "whyfail/lang/typecheck.hpp"

namespace whyfail::testgen {

struct GenConfig {
  std::vector<std::int64_t> int_pool = {-10, -1, 0, 1, 10, 100};
  std::vector<double> float_pool = {-10.0, -1.0, 0.0, 1.0, 10.0, 100.0};
  // Extra uniform draws added to each primitive pool.
  int extra_draws = 8;
  std::int64_t int_draw_min = -1000;
  std::int64_t int_draw_max = 1000;
  double float_draw_min = -1000.0;
  double float_draw_max = 1000.0;
  double null_probability = 0.1;
  double reuse_probability = 0.25;
  int max_depth = 4;
  int max_array_length = 4;
};

/// Draws `m` argument lists for the entry function. A pure function of the
/// entry signature, `m`, `seed` and `config`.
std::vector<interp::TestCase> generate_tests(const lang::TypedProgram& program, std::size_t m,
                                             std::uint64_t seed, const GenConfig& config = {});

/// Small deterministic helpers over std::mt19937_64 whose output does not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace whyfail::testgen
