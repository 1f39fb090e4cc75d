// Copyright 2026 The semdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semdp/distribution.h"

#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tests/test_util.h"

namespace semdp {
namespace {

using ::semdp::testing::StatusIs;
using ::testing::ElementsAre;

TEST(OutcomeSetTest, RejectsDuplicates) {
  EXPECT_THAT(OutcomeSet::Create({"a", "b", "a"}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(OutcomeSetTest, IndexOf) {
  ASSERT_OK_AND_ASSIGN(auto set, OutcomeSet::Create({"x", "y"}));
  EXPECT_EQ(set->IndexOf("y"), 1u);
  EXPECT_FALSE(set->IndexOf("z").has_value());
}

TEST(DistributionTest, CreateValid) {
  ASSERT_OK_AND_ASSIGN(Distribution d,
                       Distribution::Create({"a", "b"}, {0.25, 0.75}));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.ProbOf("b"), 0.75);
  EXPECT_EQ(d.ProbOf("missing"), 0.0);
}

TEST(DistributionTest, NormalizationTolerance) {
  EXPECT_OK(Distribution::Create({"a", "b"}, {0.5, 0.5 + 5e-10}));
  EXPECT_THAT(Distribution::Create({"a", "b"}, {0.5, 0.5 + 5e-9}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(DistributionTest, RejectsNegativeAndNan) {
  EXPECT_THAT(Distribution::Create({"a", "b"}, {1.5, -0.5}),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_THAT(Distribution::Create({"a", "b"}, {std::nan(""), 1.0}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(DistributionTest, RejectsLengthMismatch) {
  EXPECT_THAT(Distribution::Create({"a"}, {0.5, 0.5}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(AlignTest, ZeroExtendsMissingLabels) {
  ASSERT_OK_AND_ASSIGN(Distribution p,
                       Distribution::Create({"a", "b"}, {0.5, 0.5}));
  ASSERT_OK_AND_ASSIGN(Distribution q,
                       Distribution::Create({"c", "a"}, {0.25, 0.75}));
  AlignedPair aligned = Align(p, q);
  EXPECT_THAT(aligned.outcomes->labels(), ElementsAre("a", "b", "c"));
  EXPECT_THAT(aligned.p, ElementsAre(0.5, 0.5, 0.0));
  EXPECT_THAT(aligned.q, ElementsAre(0.75, 0.0, 0.25));
}

TEST(JointTableTest, MarginalsAndConditionals) {
  ASSERT_OK_AND_ASSIGN(auto in, OutcomeSet::Create({"x", "y"}));
  ASSERT_OK_AND_ASSIGN(auto out, OutcomeSet::Create({"s", "t"}));
  ASSERT_OK_AND_ASSIGN(JointTable joint,
                       JointTable::Create(in, out, {0.1, 0.3, 0.2, 0.4}));
  std::vector<double> marginal = joint.OutputMarginal();
  EXPECT_NEAR(marginal[0], 0.3, 1e-15);
  EXPECT_NEAR(marginal[1], 0.7, 1e-15);
  ASSERT_OK_AND_ASSIGN(Distribution given_t, joint.InputGivenOutput(1));
  EXPECT_NEAR(given_t[0], 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(given_t[1], 4.0 / 7.0, 1e-15);
  EXPECT_THAT(joint.Flatten().outcomes().labels(),
              ElementsAre("x|s", "x|t", "y|s", "y|t"));
}

TEST(JointTableTest, ZeroColumnHasNoConditional) {
  ASSERT_OK_AND_ASSIGN(auto in, OutcomeSet::Create({"x"}));
  ASSERT_OK_AND_ASSIGN(auto out, OutcomeSet::Create({"s", "t"}));
  ASSERT_OK_AND_ASSIGN(JointTable joint,
                       JointTable::Create(in, out, {1.0, 0.0}));
  EXPECT_FALSE(joint.InputGivenOutput(1).ok());
}

TEST(CompensatedSumTest, RecoversSmallTerms) {
  std::vector<double> v = {1.0, 1e-16, 1e-16, 1e-16, 1e-16, -1.0};
  EXPECT_NEAR(CompensatedSum(v), 4e-16, 1e-30);
}

}  // namespace
}  // namespace semdp
