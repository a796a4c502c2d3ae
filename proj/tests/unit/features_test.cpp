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

#include <algorithm>

#include "oracles.hpp"
#include "whyfail/features/dataset.hpp"
#include "whyfail/features/features.hpp"

namespace whyfail::features {
namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Combinations, CountsMatchBinomials) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t want = 0;
      for (std::size_t s = 1; s <= k; ++s) want += choose(n, s);
      EXPECT_EQ(combinations(n, k).size(), want) << n << " " << k;
    }
  EXPECT_EQ(combinations(10, 3).size(), 175u);
}

TEST(Combinations, OrderedBySizeThenLargestIndex) {
  auto c = combinations(4, 2);
  const std::vector<std::vector<std::size_t>> head = {{0}, {1}, {2}, {3}, {0, 1},
                                                      {0, 2}, {1, 2}, {0, 3}};
  ASSERT_GE(c.size(), head.size());
  EXPECT_TRUE(std::equal(head.begin(), head.end(), c.begin()));
  EXPECT_EQ(c.back(), (std::vector<std::size_t>{2, 3}));
}

class RunningSession : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = whyfail::testing::load_corpus("running_example");
    loc_ = engine::localize_failure(corpus_->program, corpus_->tests, config_);
    session_ = engine::prepare_session(corpus_->program, corpus_->tests, loc_,
                                       {7, interp::Position::Before}, config_, stats_);
  }

  std::optional<whyfail::testing::Corpus> corpus_;
  engine::Config config_;
  engine::Stats stats_;
  engine::Localization loc_;
  std::optional<engine::Session> session_;
};

TEST_F(RunningSession, AccessedFeaturesComeFirst) {
  ASSERT_TRUE(session_);
  std::vector<std::string> names;
  for (const auto& f : session_->features) names.push_back(f.name());
  ASSERT_EQ(names.size(), 10u);
  const std::vector<std::string> head = {"max", "stus[0].score", "stus[1].score",
                                         "stus[2].score", "stus.length"};
  EXPECT_TRUE(std::equal(head.begin(), head.end(), names.begin()));
}

TEST_F(RunningSession, InspectorsAreTypedAndLengthIsReadOnly) {
  ASSERT_TRUE(session_);
  for (const auto& f : session_->features) {
    if (f.name() == "stus.length") {
      EXPECT_EQ(f.kind, FeatureKind::Length);
      EXPECT_FALSE(f.writable);
      EXPECT_EQ(f.depth, 1u);
    }
    if (f.name() == "stus[0].isNull") EXPECT_EQ(f.kind, FeatureKind::IsNull);
    if (f.name() == "stus[0].newscore") EXPECT_FALSE(f.integral());
  }
}

TEST_F(RunningSession, ObservedVectorsFollowVerdicts) {
  ASSERT_TRUE(session_);
  EXPECT_EQ(session_->observed.count(Label::Negative), 1u);
  EXPECT_EQ(session_->observed.count(Label::Positive), 2u);
  const std::string csv = dataset_csv(session_->features, session_->observed);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "label,origin,max,stus[0].score,stus[1].score,stus[2].score,stus.length,"
            "stus[0].isNull,stus[1].isNull,stus[2].isNull,stus[0].ID,stus[0].newscore");
  EXPECT_NE(csv.find("negative,observed,94,94,60,100,3,0,0,0,1,0.0"), std::string::npos);
}

TEST(CommonFeatures, DifferentLengthsAddLastElement) {
  auto c = whyfail::testing::load_corpus("off_by_one_max");
  interp::ObservationPoint at{0, interp::Position::Before};
  interp::ExecOptions o;
  o.capture_at = {at};
  std::vector<interp::ProgramState> states;
  for (std::size_t i = 0; i < 3; ++i) {
    auto r = interp::execute(c.program, c.tests.at(i), o);
    if (r.captures.count(at)) states.push_back(r.captures.at(at));
  }
  ASSERT_EQ(states.size(), 3u);
  auto ex = extract_features(states, {"a"});
  std::vector<std::string> names;
  for (const auto& f : ex.features) names.push_back(f.name());
  EXPECT_NE(std::find(names.begin(), names.end(), "a[$]"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "a[2]"), names.end());
  EXPECT_EQ(std::find(names.begin(), names.end(), "a[3]"), names.end());
  ASSERT_EQ(ex.vectors.size(), 3u);
}

TEST(Dataset, DedupesPerLabelAndChecksWidth) {
  LabeledDataset d(2);
  EXPECT_TRUE(d.add({{1, 2}, Label::Positive}));
  EXPECT_FALSE(d.add({{1, 2}, Label::Positive}));
  EXPECT_TRUE(d.add({{1, 2}, Label::Negative}));
  EXPECT_THROW(d.add({{1}, Label::Negative}), std::invalid_argument);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.project(Label::Negative, {1}), (std::vector<std::vector<double>>{{2}}));
}

}  // namespace
}  // namespace whyfail::features
