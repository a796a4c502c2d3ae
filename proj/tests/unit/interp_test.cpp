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

#include <cstdint>
#include <limits>

#include "oracles.hpp"
#include "whyfail/interp/interpreter.hpp"
#include "whyfail/interp/slice.hpp"
#include "whyfail/testgen/suite.hpp"
#include "whyfail/testgen/test_file.hpp"

namespace whyfail::interp {
namespace {

using lang::Value;

Verdict run_int(const lang::TypedProgram& p, std::int64_t x) {
  TestCase t;
  t.id = 1;
  t.args = {Value{x}};
  return execute(p, t).verdict;
}

TEST(Execute, VerdictsFollowTheDesignatedAssertion) {
  auto p = lang::load_program(
      "entry fn f(int x) {\n"
      "  if (x > 100) {\n"
      "    return;\n"
      "  }\n"
      "  int y = 10 / x;\n"
      "  assert y < 5;\n"
      "}\n");
  EXPECT_EQ(run_int(p, 1), Verdict::Fail);
  EXPECT_EQ(run_int(p, 3), Verdict::Pass);
  EXPECT_EQ(run_int(p, 0), Verdict::Irrelevant);   // division by zero
  EXPECT_EQ(run_int(p, 500), Verdict::Irrelevant);  // assertion never reached
}

TEST(Execute, IntegerOverflowWraps) {
  auto p = lang::load_program(
      "entry fn f(int x) {\n"
      "  int y = x + 1;\n"
      "  assert y > x;\n"
      "}\n");
  EXPECT_EQ(run_int(p, 41), Verdict::Pass);
  EXPECT_EQ(run_int(p, std::numeric_limits<std::int64_t>::max()), Verdict::Fail);
}

TEST(Execute, StepBudgetMakesRunIrrelevant) {
  auto p = lang::load_program(
      "entry fn f(int x) {\n"
      "  while (x > 0) {\n"
      "    x = x + 1;\n"
      "  }\n"
      "  assert x == 0;\n"
      "}\n");
  TestCase t{1, {Value{std::int64_t{1}}}};
  ExecOptions o;
  o.step_budget = 1000;
  auto r = execute(p, t, o);
  EXPECT_EQ(r.verdict, Verdict::Irrelevant);
  EXPECT_TRUE(r.budget_exceeded);
}

TEST(Execute, DeepRecursionRuns) {
  auto p = lang::load_program(
      "fn depth(int n) -> int {\n"
      "  if (n == 0) {\n"
      "    return 0;\n"
      "  }\n"
      "  return 1 + depth(n - 1);\n"
      "}\n"
      "entry fn f(int n) {\n"
      "  assert depth(n) == n;\n"
      "}\n");
  EXPECT_EQ(run_int(p, 15000), Verdict::Pass);
  EXPECT_EQ(run_int(p, 25000), Verdict::Irrelevant);
}

TEST(Execute, ArgumentMismatchThrows) {
  auto p = lang::load_program("entry fn f(int x) {\n  assert x > 0;\n}\n");
  TestCase t{1, {Value{true}}};
  EXPECT_THROW(execute(p, t), ArgumentError);
}

TEST(Execute, RunningExampleVerdicts) {
  auto c = whyfail::testing::load_corpus("running_example");
  auto suite = testgen::run_suite(c.program, c.tests);
  EXPECT_EQ(suite.failed, std::vector<std::size_t>{0});
  EXPECT_EQ(suite.passed, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(suite.irrelevant, std::vector<std::size_t>{2});
}

TEST(Execute, OverlayChangesOutcome) {
  auto p = lang::load_program(
      "entry fn f(int x) {\n"
      "  int y = x * 2;\n"
      "  assert y < 10;\n"
      "}\n");
  TestCase t{1, {Value{std::int64_t{9}}}};
  EXPECT_EQ(execute(p, t).verdict, Verdict::Fail);
  MutationOverlay overlay{{1, Position::Before}, {{AccessPath("y"), Value{std::int64_t{3}}}}};
  ExecOptions o;
  o.overlay = &overlay;
  EXPECT_EQ(execute(p, t, o).verdict, Verdict::Pass);
}

TEST(Execute, CapturesStateAtPoint) {
  auto c = whyfail::testing::load_corpus("off_by_one_max");
  ExecOptions o;
  ObservationPoint at{0, Position::After};
  o.capture_at = {at};
  auto r = execute(c.program, c.tests.at(0), o);
  ASSERT_TRUE(r.captures.count(at));
  EXPECT_FALSE(r.captures.at(at).bindings.empty());
}

class SliceProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SliceProperty, MatchesReachingDefinitionsClosure) {
  EXPECT_EQ(whyfail::testing::check_slice_case(GetParam()), "");
}

INSTANTIATE_TEST_SUITE_P(Seeds, SliceProperty, ::testing::Range<std::uint64_t>(1, 41));

TEST(Slice, IgnoresUnrelatedDefinitions) {
  auto p = lang::load_program(
      "entry fn f(int a, int b) {\n"
      "  int x = a + 1;\n"
      "  int y = b * 2;\n"
      "  int z = x - 3;\n"
      "  assert z > 0;\n"
      "}\n");
  TestCase t{1, {Value{std::int64_t{1}}, Value{std::int64_t{2}}}};
  auto r = execute(p, t);
  ASSERT_EQ(r.verdict, Verdict::Fail);
  auto s = dynamic_slice(r.trace, *r.assertion_event);
  EXPECT_EQ(s.statements, (std::set<std::size_t>{0, 2, 3}));
}

}  // namespace
}  // namespace whyfail::interp
