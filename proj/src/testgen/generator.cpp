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

#include "whyfail/testgen/generator.hpp"

#include <map>

namespace whyfail::testgen {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

using lang::Type;
using lang::TypeKind;
using lang::Value;

class Generator {
 public:
  Generator(const lang::TypedProgram& program, std::uint64_t seed, const GenConfig& config)
      : program_(program), rng_(seed), config_(config) {
    ints_ = config.int_pool;
    floats_ = config.float_pool;
    for (int i = 0; i < config.extra_draws; ++i) {
      ints_.push_back(rng_.between(config.int_draw_min, config.int_draw_max));
      floats_.push_back(config.float_draw_min +
                        rng_.unit() * (config.float_draw_max - config.float_draw_min));
    }
  }

  std::vector<Value> arguments() {
    std::vector<Value> out;
    for (const auto& p : program_.program().entry().params) out.push_back(value(p.type, 0));
    return out;
  }

  std::uint64_t state() { return rng_.next(); }

 private:
  Value value(const Type& type, int depth) {
    switch (type.kind()) {
      case TypeKind::Int: return ints_[rng_.below(ints_.size())];
      case TypeKind::Float: return floats_[rng_.below(floats_.size())];
      case TypeKind::Bool: return rng_.below(2) == 1;
      case TypeKind::Array: return array(type, depth);
      case TypeKind::Record: return record(type, depth);
      default: return lang::NullValue{};
    }
  }

  Value array(const Type& type, int depth) {
    auto arr = std::make_shared<lang::ArrayObject>();
    arr->element = type.element();
    if (depth < config_.max_depth) {
      auto n = rng_.below(static_cast<std::uint64_t>(config_.max_array_length) + 1);
      for (std::uint64_t i = 0; i < n; ++i) arr->elements.push_back(value(type.element(), depth + 1));
    }
    return arr;
  }

  Value record(const Type& type, int depth) {
    if (depth >= config_.max_depth || rng_.chance(config_.null_probability))
      return lang::NullValue{};
    auto& made = objects_[type.record_name()];
    if (!made.empty() && rng_.chance(config_.reuse_probability))
      return lang::deep_copy(made[rng_.below(made.size())]);
    auto def = program_.program().find_record(type.record_name());
    auto rec = std::make_shared<lang::RecordObject>();
    rec->def = def;
    for (const auto& f : def->fields) rec->fields.push_back(value(f.type, depth + 1));
    made.push_back(lang::deep_copy(rec));
    return rec;
  }

  const lang::TypedProgram& program_;
  Rng rng_;
  const GenConfig& config_;
  std::vector<std::int64_t> ints_;
  std::vector<double> floats_;
  std::map<std::string, std::vector<Value>> objects_;
};

}  // namespace

std::vector<interp::TestCase> generate_tests(const lang::TypedProgram& program, std::size_t m,
                                             std::uint64_t seed, const GenConfig& config) {
  Generator gen(program, seed, config);
  std::vector<interp::TestCase> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    interp::TestCase t;
    t.id = i + 1;
    t.provenance = interp::Provenance::Generated;
    t.seed = gen.state();
    t.args = gen.arguments();
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace whyfail::testgen
