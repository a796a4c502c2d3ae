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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "whyfail/engine/engine.hpp"
#include "whyfail/localize/localize.hpp"

namespace whyfail::localize {
namespace {

TEST(Ochiai, HandComputedMatrix) {
  // Three tests over statements 0..2; test 0 fails.
  std::vector<std::set<std::size_t>> cov = {{0, 1}, {0, 2}, {0}};
  std::vector<bool> failed = {true, false, false};
  auto m = ochiai_scores(cov, failed, {0, 1, 2});
  EXPECT_DOUBLE_EQ(m.score(0), 1.0 / std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(m.score(1), 1.0);
  EXPECT_DOUBLE_EQ(m.score(2), 0.0);
  EXPECT_EQ(m.statements.at(0).ef, 1u);
  EXPECT_EQ(m.statements.at(0).ep, 2u);
}

TEST(Ochiai, UncoveredStatementScoresZero) {
  auto m = ochiai_scores({{0}}, {true}, {0, 5});
  EXPECT_EQ(m.score(0), 1.0);
  EXPECT_EQ(m.score(5), 0.0);
}

TEST(Ochiai, NoFailureThrows) { EXPECT_THROW(ochiai_scores({{0}}, {false}, {0}), NoFailingTest); }

TEST(Localize, NoFailingTestThrows) {
  auto c = whyfail::testing::load_corpus("running_example");
  std::vector<interp::TestCase> passing = {c.tests.at(1)};
  EXPECT_THROW(engine::localize_failure(c.program, passing, {}), NoFailingTest);
}

TEST(Localize, ThresholdFiltersPoints) {
  auto c = whyfail::testing::load_corpus("running_example");
  engine::Config strict;
  strict.x_threshold = 0.99;
  EXPECT_TRUE(engine::localize_failure(c.program, c.tests, strict).points.empty());
  engine::Config loose;
  loose.x_threshold = 0.0;
  EXPECT_GE(engine::localize_failure(c.program, c.tests, loose).points.size(), 3u);
}

TEST(Localize, PointsAreRankedByScore) {
  auto c = whyfail::testing::load_corpus("running_example");
  auto loc = engine::localize_failure(c.program, c.tests, {});
  for (std::size_t i = 1; i < loc.points.size(); ++i)
    EXPECT_GE(loc.points[i - 1].score, loc.points[i].score);
}

}  // namespace
}  // namespace whyfail::localize
