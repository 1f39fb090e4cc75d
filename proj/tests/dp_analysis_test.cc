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

#include "semdp/dp_analysis.h"

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "semdp/database.h"
#include "semdp/mechanism.h"
#include "semdp/noise.h"
#include "tests/test_util.h"

namespace semdp {
namespace {

using ::semdp::testing::StatusIs;
using ::semdp::testing::SubsetTightDelta;

constexpr double kInf = std::numeric_limits<double>::infinity();

DatabaseSpace Binary(int n) { return *DatabaseSpace::Create({"0", "1"}, n); }

std::vector<Database> All(const DatabaseSpace& space) {
  return *space.Enumerate();
}

absl::StatusOr<Mechanism> FromColumns(
    const DatabaseSpace& space, std::vector<std::vector<double>> rows_in) {
  std::map<Database, std::vector<double>> rows;
  std::vector<Database> all = All(space);
  std::vector<std::string> labels;
  for (size_t t = 0; t < rows_in[0].size(); ++t)
    labels.push_back(absl::StrCat("t", t));
  for (size_t k = 0; k < all.size(); ++k) rows[all[k]] = rows_in[k];
  return Mechanism::Dense(space, *OutcomeSet::Create(labels), rows);
}

TEST(NeighborPairsTest, CountsAndOrder) {
  ASSERT_OK_AND_ASSIGN(std::vector<NeighborPair> pairs,
                       AllNeighborPairs(Binary(3)));
  EXPECT_EQ(pairs.size(), 12u);  // 8 * 3 / 2
  for (const NeighborPair& p : pairs) {
    EXPECT_EQ(HammingDistance(p.x, p.y), 1);
    EXPECT_LT(p.x, p.y);
  }
  ASSERT_OK_AND_ASSIGN(DatabaseSpace ternary,
                       DatabaseSpace::Create({"a", "b", "c"}, 2));
  ASSERT_OK_AND_ASSIGN(pairs, AllNeighborPairs(ternary));
  EXPECT_EQ(pairs.size(), 18u);  // 9 * 4 / 2
}

TEST(EpsilonMaxTest, ConstantIsZero) {
  ASSERT_OK_AND_ASSIGN(Mechanism m,
                       FromColumns(Binary(1), {{0.2, 0.8}, {0.2, 0.8}}));
  ASSERT_OK_AND_ASSIGN(EpsilonMaxResult r, EpsilonMax(m));
  EXPECT_EQ(r.epsilon, 0.0);
}

TEST(EpsilonMaxTest, RandomizedResponse) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(2), 0.25));
  ASSERT_OK_AND_ASSIGN(EpsilonMaxResult r, EpsilonMax(m));
  EXPECT_NEAR(r.epsilon, std::log(3.0), 1e-12);
  ASSERT_TRUE(r.worst.has_value());
  EXPECT_EQ(HammingDistance(r.worst->x, r.worst->y), 1);
}

TEST(EpsilonMaxTest, DisjointSupportIsInfinite) {
  ASSERT_OK_AND_ASSIGN(Mechanism m,
                       FromColumns(Binary(1), {{1.0, 0.0}, {0.0, 1.0}}));
  ASSERT_OK_AND_ASSIGN(EpsilonMaxResult r, EpsilonMax(m));
  EXPECT_EQ(r.epsilon, kInf);
}

TEST(EpsilonMaxTest, SharedZeroIsIgnored) {
  ASSERT_OK_AND_ASSIGN(
      Mechanism m,
      FromColumns(Binary(1), {{0.5, 0.5, 0.0}, {0.25, 0.75, 0.0}}));
  ASSERT_OK_AND_ASSIGN(EpsilonMaxResult r, EpsilonMax(m));
  EXPECT_NEAR(r.epsilon, std::log(2.0), 1e-12);
}

TEST(TightDeltaCurveTest, RandomizedResponseMatchesSubsetOracle) {
  DatabaseSpace space = Binary(2);
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(space, 0.25));
  const std::vector<double> eps = {0.0, 0.3, 0.7, std::log(3.0), 2.0};
  ASSERT_OK_AND_ASSIGN(DpReport report, TightDeltaCurve(m, eps));
  ASSERT_OK_AND_ASSIGN(std::vector<NeighborPair> pairs,
                       AllNeighborPairs(space));
  ASSERT_EQ(report.delta_at.size(), eps.size());
  for (size_t e = 0; e < eps.size(); ++e) {
    double expected = 0.0;
    for (const NeighborPair& p : pairs) {
      expected = std::max(
          expected,
          SubsetTightDelta((*m.Row(p.x))->probs, (*m.Row(p.y))->probs, eps[e]));
    }
    EXPECT_NEAR(report.delta_at[e].delta, expected, 1e-12) << eps[e];
  }
  EXPECT_NEAR(report.delta_at[0].delta, 0.5, 1e-12);
  EXPECT_NEAR(report.delta_at[3].delta, 0.0, 1e-12);
}

TEST(TightDeltaCurveTest, LaplaceSumSmallDeltaAtEpsilon) {
  DatabaseSpace space = Binary(4);
  const double epsilon = 0.5;
  ASSERT_OK_AND_ASSIGN(NoiseSpec noise,
                       NoiseSpec::Default(NoiseKind::kLaplace, 1.0 / epsilon));
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeNoisySum(space, noise));
  const std::vector<double> eps = {epsilon};
  ASSERT_OK_AND_ASSIGN(DpReport report, TightDeltaCurve(m, eps));
  EXPECT_LE(report.delta_at[0].delta, 1e-6);
  ASSERT_OK_AND_ASSIGN(EpsilonMaxResult r, EpsilonMax(m));
  EXPECT_LE(r.epsilon, epsilon + 1e-9);
}

TEST(TightDeltaCurveTest, SlightlySmallerDeltaFailsOnWorstPair) {
  DatabaseSpace space = Binary(3);
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(space, 0.3));
  const double epsilon = 0.4;
  const std::vector<double> eps = {epsilon};
  ASSERT_OK_AND_ASSIGN(DpReport report, TightDeltaCurve(m, eps));
  const DeltaPoint& point = report.delta_at[0];
  ASSERT_GT(point.delta, 1e-6);
  ASSERT_TRUE(point.worst.has_value());
  ASSERT_OK_AND_ASSIGN(auto rx, m.Row(point.worst->x));
  ASSERT_OK_AND_ASSIGN(auto ry, m.Row(point.worst->y));
  EXPECT_TRUE(IsIndistinguishable(rx->probs, ry->probs,
                                  IndistParams{epsilon, point.delta}));
  EXPECT_FALSE(IsIndistinguishable(rx->probs, ry->probs,
                                   IndistParams{epsilon, point.delta - 1e-6}));
}

TEST(TightDeltaCurveTest, PointwiseOnWorstPair) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(2), 0.25));
  const std::vector<double> eps = {0.5};
  ASSERT_OK_AND_ASSIGN(
      DpReport report,
      TightDeltaCurve(m, eps, std::nullopt, IndistParams{0.5, 0.1}));
  ASSERT_TRUE(report.pointwise.has_value());
  EXPECT_GT(report.pointwise->bad_mass_x, 0.0);
}

TEST(TightDeltaCurveTest, RejectsNegativeEpsilon) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(1), 0.25));
  const std::vector<double> eps = {-0.1};
  EXPECT_THAT(TightDeltaCurve(m, eps),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(EpsilonForDeltaTest, InvertsTheCurve) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(3), 0.2));
  ASSERT_OK_AND_ASSIGN(double eps, EpsilonForDelta(m, 0.05));
  const std::vector<double> grid = {eps, eps - 1e-6};
  ASSERT_OK_AND_ASSIGN(DpReport report, TightDeltaCurve(m, grid));
  EXPECT_LE(report.delta_at[0].delta, 0.05 + 1e-9);
  EXPECT_GT(report.delta_at[1].delta, 0.05 - 1e-9);
  ASSERT_OK_AND_ASSIGN(double at_zero, EpsilonForDelta(m, 0.0));
  ASSERT_OK_AND_ASSIGN(EpsilonMaxResult max, EpsilonMax(m));
  EXPECT_NEAR(at_zero, max.epsilon, 1e-8);
}

TEST(EpsilonForDeltaTest, DisjointIsInfinite) {
  ASSERT_OK_AND_ASSIGN(Mechanism m,
                       FromColumns(Binary(1), {{1.0, 0.0}, {0.0, 1.0}}));
  ASSERT_OK_AND_ASSIGN(double eps, EpsilonForDelta(m, 0.5));
  EXPECT_EQ(eps, kInf);
}

TEST(GoodSetTest, MonotoneInParameters) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"0", "1", "2"}, 3));
  ASSERT_OK_AND_ASSIGN(Query median, Query::Median(space));
  ASSERT_OK_AND_ASSIGN(Mechanism m,
                       MakeLocalSensitivityLaplace(median, space, 1.0, 0.5));
  ASSERT_OK_AND_ASSIGN(std::vector<Database> strict,
                       GoodSet(m, IndistParams{0.2, 1e-6}));
  ASSERT_OK_AND_ASSIGN(std::vector<Database> loose,
                       GoodSet(m, IndistParams{0.5, 1e-6}));
  ASSERT_OK_AND_ASSIGN(std::vector<Database> looser,
                       GoodSet(m, IndistParams{1.5, 1e-3}));
  EXPECT_LE(strict.size(), loose.size());
  EXPECT_LE(loose.size(), looser.size());
  absl::flat_hash_set<Database> loose_set(loose.begin(), loose.end());
  for (const Database& x : strict) EXPECT_TRUE(loose_set.contains(x));
}

TEST(GoodSetTest, EmptyAtZeroForNonConstant) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(2), 0.25));
  ASSERT_OK_AND_ASSIGN(std::vector<Database> good,
                       GoodSet(m, IndistParams{0.0, 0.0}));
  EXPECT_TRUE(good.empty());
  ASSERT_OK_AND_ASSIGN(good, GoodSet(m, IndistParams{std::log(3.0), 0.0}));
  EXPECT_EQ(good.size(), 4u);
}

TEST(ExtractionTest, RandomizedResponseAtItsEpsilonBar) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(2), 0.25));
  const double ebar = EpsilonBar(std::log(3.0));  // 2
  ASSERT_OK_AND_ASSIGN(ExtractionReport r,
                       SemanticToDpExtraction(m, ebar, 0.0));
  EXPECT_TRUE(r.range_warning);
  EXPECT_EQ(r.bayes_epsilon, kInf);
  EXPECT_TRUE(r.premise_holds);
  EXPECT_TRUE(r.claim_certified);
  EXPECT_NEAR(r.claimed.epsilon, 2 * std::log(3.0), 1e-12);
  EXPECT_NEAR(r.max_two_point_loss, 0.25, 1e-12);
}

TEST(ExtractionTest, SmallEpsilonBarPremiseFails) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(2), 0.25));
  ASSERT_OK_AND_ASSIGN(ExtractionReport r, SemanticToDpExtraction(m, 0.1, 0.0));
  EXPECT_FALSE(r.range_warning);
  EXPECT_NEAR(r.bayes_epsilon, std::log(1.1 / 0.9), 1e-12);
  EXPECT_FALSE(r.premise_holds);
  EXPECT_NEAR(r.worst_premise_mass, 1.0, 1e-12);
  EXPECT_TRUE(r.worst_pair.has_value());
}

TEST(ExtractionTest, PremiseImpliesClaim) {
  // Near-private response: two-point losses are tiny.
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(3), 0.45));
  ASSERT_OK_AND_ASSIGN(ExtractionReport r,
                       SemanticToDpExtraction(m, 0.25, 0.0));
  EXPECT_TRUE(r.premise_holds);
  EXPECT_TRUE(r.claim_certified);
  EXPECT_DOUBLE_EQ(r.claimed.epsilon, 2 * std::log1p(0.25));
}

TEST(ExtractionTest, ClaimedDeltaClamped) {
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(Binary(1), 0.25));
  ASSERT_OK_AND_ASSIGN(ExtractionReport r, SemanticToDpExtraction(m, 0.1, 0.8));
  EXPECT_EQ(r.claimed.delta, 1.0);
  EXPECT_FALSE(SemanticToDpExtraction(m, -1.0, 0.0).ok());
  EXPECT_FALSE(SemanticToDpExtraction(m, 0.1, 1.5).ok());
}

}  // namespace
}  // namespace semdp
