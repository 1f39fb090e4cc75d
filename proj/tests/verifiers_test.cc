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

#include "semdp/verifiers.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "absl/strings/str_cat.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "semdp/database.h"
#include "semdp/dp_analysis.h"
#include "semdp/mechanism.h"
#include "semdp/random_instances.h"
#include "semdp/semantics.h"
#include "tests/test_util.h"

namespace semdp {
namespace {

using ::semdp::testing::StatusIs;
using ::semdp::testing::SubsetStatisticalDifference;
using ::semdp::testing::SubsetTightDelta;

DatabaseSpace Binary(int n) { return *DatabaseSpace::Create({"0", "1"}, n); }

std::vector<Database> All(const DatabaseSpace& space) {
  return *space.Enumerate();
}

absl::StatusOr<JointTable> Joint(std::vector<double> probs, size_t inputs,
                                 size_t outputs) {
  std::vector<std::string> in, out;
  for (size_t i = 0; i < inputs; ++i) in.push_back(absl::StrCat("x", i));
  for (size_t t = 0; t < outputs; ++t) out.push_back(absl::StrCat("t", t));
  return JointTable::Create(*OutcomeSet::Create(in), *OutcomeSet::Create(out),
                            std::move(probs));
}

// Column t of a joint, renormalized; empty when the column has no mass.
std::vector<double> Conditional(const JointTable& j, size_t t) {
  std::vector<double> c;
  double total = 0.0;
  for (size_t i = 0; i < j.num_inputs(); ++i) {
    c.push_back(j.at(i, t));
    total += j.at(i, t);
  }
  if (total <= 0.0) return {};
  for (double& v : c) v /= total;
  return c;
}

double Marginal(const JointTable& j, size_t t) {
  double total = 0.0;
  for (size_t i = 0; i < j.num_inputs(); ++i) total += j.at(i, t);
  return total;
}

TEST(ConditionalIndistTest, FailureMassMatchesSubsetOracle) {
  RandomInstances rng(3);
  const IndistParams params{0.3, 1e-3};
  const double conditional_eps = 3 * params.epsilon;
  const double conditional_delta = 2 * std::sqrt(params.delta);
  int failing_trials = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto pair = rng.JointPair(4, 5);
    const JointTable& a = pair.first;
    const JointTable& b = pair.second;
    ASSERT_OK_AND_ASSIGN(ConditionalReport report,
                         VerifyConditionalIndist(a, b, params));
    double fail_a = 0.0;
    double fail_b = 0.0;
    for (size_t t = 0; t < a.num_outputs(); ++t) {
      const std::vector<double> ca = Conditional(a, t);
      const std::vector<double> cb = Conditional(b, t);
      if (ca.empty() && cb.empty()) continue;
      const bool fails =
          ca.empty() || cb.empty() ||
          SubsetTightDelta(ca, cb, conditional_eps) > conditional_delta + 1e-12;
      if (fails) {
        fail_a += Marginal(a, t);
        fail_b += Marginal(b, t);
      }
    }
    if (fail_a + fail_b > 0.0) ++failing_trials;
    EXPECT_NEAR(report.failure_mass_first, fail_a, 1e-12);
    EXPECT_NEAR(report.failure_mass_second, fail_b, 1e-12);
    EXPECT_NEAR(
        report.bound,
        std::sqrt(params.delta) +
            2 * params.delta / (params.epsilon * std::exp(params.epsilon)),
        1e-15);
  }
  EXPECT_GT(failing_trials, 0);
}

TEST(ConditionalIndistTest, IdenticalJointsNeverFail) {
  ASSERT_OK_AND_ASSIGN(JointTable j,
                       Joint({0.1, 0.2, 0.0, 0.3, 0.0, 0.4}, 2, 3));
  ASSERT_OK_AND_ASSIGN(ConditionalReport report,
                       VerifyConditionalIndist(j, j, IndistParams{0.1, 1e-4}));
  EXPECT_TRUE(report.premise);
  EXPECT_EQ(report.failure_mass_first, 0.0);
  EXPECT_EQ(report.sd_failure_mass_first, 0.0);
  EXPECT_TRUE(report.Holds());
  EXPECT_TRUE(report.SdHolds());
}

TEST(ConditionalIndistTest, OneSidedZeroTranscriptFails) {
  ASSERT_OK_AND_ASSIGN(JointTable a, Joint({0.5, 0.0, 0.5, 0.0}, 2, 2));
  ASSERT_OK_AND_ASSIGN(JointTable b, Joint({0.45, 0.05, 0.45, 0.05}, 2, 2));
  ASSERT_OK_AND_ASSIGN(ConditionalReport report,
                       VerifyConditionalIndist(a, b, IndistParams{0.2, 0.1}));
  EXPECT_EQ(report.failure_mass_first, 0.0);
  EXPECT_NEAR(report.failure_mass_second, 0.1, 1e-15);
}

TEST(ConditionalIndistTest, SdFailureUsesSdBound) {
  ASSERT_OK_AND_ASSIGN(JointTable a, Joint({0.4, 0.1, 0.1, 0.4}, 2, 2));
  ASSERT_OK_AND_ASSIGN(JointTable b, Joint({0.1, 0.4, 0.4, 0.1}, 2, 2));
  const IndistParams params{0.05, 1e-4};
  ASSERT_OK_AND_ASSIGN(ConditionalReport report,
                       VerifyConditionalIndist(a, b, params));
  EXPECT_FALSE(report.premise);
  const double sd =
      SubsetStatisticalDifference(Conditional(a, 0), Conditional(b, 0));
  EXPECT_GT(sd, report.sd_bound);
  EXPECT_NEAR(report.sd_failure_mass_first, 1.0, 1e-15);
  EXPECT_NEAR(report.sd_bound, std::exp(0.15) - 1 + 2 * std::sqrt(1e-4), 1e-15);
}

TEST(ConditionalIndistTest, RejectsMismatchedLabels) {
  ASSERT_OK_AND_ASSIGN(JointTable a, Joint({0.5, 0.5}, 1, 2));
  ASSERT_OK_AND_ASSIGN(JointTable b, Joint({0.25, 0.25, 0.25, 0.25}, 2, 2));
  EXPECT_THAT(VerifyConditionalIndist(a, b, IndistParams{0.1, 0.0}),
              StatusIs(absl::StatusCode::kInvalidArgument));
}

TEST(PriorJointTest, EntriesAreWeightTimesRow) {
  DatabaseSpace space = Binary(2);
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(space, 0.25));
  ASSERT_OK_AND_ASSIGN(
      BeliefPrior prior,
      BeliefPrior::Create(space, All(space), {0.1, 0.2, 0.3, 0.4}));
  ASSERT_OK_AND_ASSIGN(JointTable j, PriorJoint(m, prior));
  ASSERT_EQ(j.num_inputs(), 4u);
  for (size_t k = 0; k < 4; ++k) {
    ASSERT_OK_AND_ASSIGN(auto row, m.Row(prior.support()[k]));
    for (size_t t = 0; t < 4; ++t) {
      EXPECT_EQ(j.at(k, t), prior.weights()[k] * row->probs[t]);
    }
  }
}

TEST(SemanticBoundTest, UsesDerivedConstants) {
  DatabaseSpace space = Binary(3);
  ASSERT_OK_AND_ASSIGN(Mechanism m, MakeRandomizedResponse(space, 0.45));
  ASSERT_OK_AND_ASSIGN(BeliefPrior prior,
                       BeliefPrior::Uniform(space, All(space)));
  ASSERT_OK_AND_ASSIGN(SemanticReport semantic,
                       ComputeSemanticReport(m, prior));
  const IndistParams params{0.2, 1e-4};
  ASSERT_OK_AND_ASSIGN(SemanticBoundCheck check,
                       CheckSemanticBound(semantic, 3, params));
  EXPECT_NEAR(check.epsilon_prime, std::exp(0.6) - 1 + 0.02, 1e-15);
  EXPECT_NEAR(check.delta_prime, 3 * (0.01 + 2e-4 / (0.2 * std::exp(0.2))),
              1e-15);
  EXPECT_EQ(check.mass, semantic.MassExceeding(check.epsilon_prime));
  EXPECT_TRUE(check.Holds());
}

TEST(GoodSetBoundTest, NotApplicableWhenGoodMassTooSmall) {
  ASSERT_OK_AND_ASSIGN(DatabaseSpace space,
                       DatabaseSpace::Create({"0", "1", "2"}, 3));
  ASSERT_OK_AND_ASSIGN(Query median, Query::Median(space));
  ASSERT_OK_AND_ASSIGN(Mechanism m,
                       MakeLocalSensitivityLaplace(median, space, 1.0, 0.1));
  const IndistParams params{0.1, 1e-4};
  ASSERT_OK_AND_ASSIGN(std::vector<Database> good, GoodSet(m, params));
  ASSERT_FALSE(good.empty());
  ASSERT_OK_AND_ASSIGN(std::vector<Database> all, space.Enumerate());
  ASSERT_LT(good.size(), all.size());
  Database bad;
  for (const Database& x : all) {
    if (std::find(good.begin(), good.end(), x) == good.end()) {
      bad = x;
      break;
    }
  }
  ASSERT_OK_AND_ASSIGN(BeliefPrior half,
                       BeliefPrior::Create(space, {good[0], bad}, {0.5, 0.5}));
  ASSERT_OK_AND_ASSIGN(GoodSetReport report,
                       VerifyGoodSetBound(m, params, half));
  EXPECT_FALSE(report.applicable);
  EXPECT_NEAR(report.prior_good_mass, 0.5, 1e-15);

  ASSERT_OK_AND_ASSIGN(BeliefPrior inside, BeliefPrior::Uniform(space, good));
  ASSERT_OK_AND_ASSIGN(report, VerifyGoodSetBound(m, params, inside));
  EXPECT_TRUE(report.applicable);
  EXPECT_TRUE(report.check.Holds());
}

TEST(CounterexampleTest, Validation) {
  EXPECT_THAT(RunCounterexample(1, 0.5, 1e-6),
              StatusIs(absl::StatusCode::kInvalidArgument));
  CounterexampleOptions options;
  options.step_fraction = 0.75;
  EXPECT_THAT(RunCounterexample(10, 0.5, 1e-6, options),
              StatusIs(absl::StatusCode::kInvalidArgument));
  EXPECT_FALSE(RunCounterexample(10, -0.5, 1e-6).ok());
}

TEST(CounterexampleTest, SmallInstanceStructure) {
  ASSERT_OK_AND_ASSIGN(CounterexampleReport report,
                       RunCounterexample(20, 0.5, std::pow(2.0, -20)));
  EXPECT_EQ(report.n, 20);
  EXPECT_EQ(report.touched.size(), 21u);
  EXPECT_TRUE(report.game1_uniform);
  EXPECT_TRUE(report.touched_pass);
  EXPECT_NEAR(report.grid_step, report.sigma / 8, 1e-15);
  double total = 0.0;
  for (const CounterexampleRow& row : report.rows) {
    EXPECT_EQ(row.posterior_game1_x0, 0.5);
    total += row.prob_real_db;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(CounterexampleTest, FullSizeInstance) {
  ASSERT_OK_AND_ASSIGN(CounterexampleReport report,
                       RunCounterexample(500, 0.5, std::pow(2.0, -20)));
  EXPECT_NEAR(report.sigma, 8.94427191, 1e-8);
  EXPECT_TRUE(report.touched_pass);
  EXPECT_LE(report.worst_touched_delta, std::pow(2.0, -20) + 1e-6);
  EXPECT_GE(report.mass_at_threshold, 0.99);
  EXPECT_TRUE(report.game1_uniform);
  EXPECT_LT(report.max_log_ratio_error, 0.05);
  EXPECT_NEAR(report.predicted_log_ratio_at_n, 999.0 / (2 * 80.0), 1e-9);
}

}  // namespace
}  // namespace semdp
