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

#ifndef SEMDP_VERIFIERS_H_
#define SEMDP_VERIFIERS_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "semdp/database.h"
#include "semdp/distribution.h"
#include "semdp/indistinguishability.h"
#include "semdp/mechanism.h"
#include "semdp/semantics.h"

namespace semdp {

// Conditional check on two joint laws (X, A(X)) and (Y, A'(Y)) sharing input
// and transcript labels. For each transcript t the conditionals X|t and Y|t
// are tested against (3 eps, 2 sqrt(delta)); the SD form tests
// SD(X|t, Y|t) <= e^{3 eps} - 1 + 2 sqrt(delta).
struct ConditionalReport {
  IndistParams params;
  IndistParams conditional;
  double bound = 0.0;  // sqrt(delta) + 2 delta / (eps e^eps)
  double sd_bound = 0.0;
  bool premise = false;  // the joints are (eps, delta)-indistinguishable
  double failure_mass_first = 0.0;
  double failure_mass_second = 0.0;
  double sd_failure_mass_first = 0.0;
  double sd_failure_mass_second = 0.0;
  int skipped_transcripts = 0;

  double Margin() const;
  double SdMargin() const;
  bool Holds() const { return Margin() >= 0.0; }
  bool SdHolds() const { return SdMargin() >= 0.0; }
};

absl::StatusOr<ConditionalReport> VerifyConditionalIndist(
    const JointTable& first, const JointTable& second,
    const IndistParams& params);

// Joint law of (X, A(X)) with X drawn from the prior; inputs are labeled by
// formatted databases.
absl::StatusOr<JointTable> PriorJoint(const Mechanism& m,
                                      const BeliefPrior& prior);

// mass_exceeding(e^{3 eps} - 1 + 2 sqrt(delta)) against n * delta''.
struct SemanticBoundCheck {
  double epsilon_prime = 0.0;
  double delta_prime = 0.0;
  double mass = 0.0;
  double epsilon_star = 0.0;
  double Margin() const { return delta_prime - mass; }
  bool Holds() const { return mass <= delta_prime + kDeltaTolerance; }
};

absl::StatusOr<SemanticBoundCheck> CheckSemanticBound(
    const SemanticReport& report, int n, const IndistParams& params);

struct GoodSetReport {
  IndistParams params;
  size_t good_set_size = 0;
  double prior_good_mass = 0.0;
  bool applicable = false;
  SemanticBoundCheck check;
};

// Reports not-applicable, without asserting anything, when b[E] < 1 - delta.
absl::StatusOr<GoodSetReport> VerifyGoodSetBound(const Mechanism& m,
                                                 const IndistParams& params,
                                                 const BeliefPrior& prior);

struct CounterexampleOptions {
  double log_base = 2.0;
  double step_fraction = 0.125;  // grid step as a fraction of sigma
  double tail_mass = 1e-12;
  double sd_threshold = 0.45;
  // Slack on delta when checking the touched neighbor pairs.
  double delta_slack = 1e-6;
};

struct CounterexampleRow {
  std::string transcript;
  double midpoint = 0.0;
  // Pr[A(1,0,...,0) = t] / Pr[A(0^n) = t].
  double ratio = 0.0;
  double predicted_ratio = 0.0;      // exp((2t - 1) / (2 sigma^2))
  double predicted_ratio_alt = 0.0;  // exp((2t - 1) / (2 sigma))
  double posterior_x0 = 0.0;
  double posterior_game1_x0 = 0.0;
  double sd_game1 = 0.0;
  double prob_real_db = 0.0;
};

struct TouchedPair {
  Database x;
  Database y;
  double tight_delta = 0.0;
};

struct CounterexampleReport {
  int n = 0;
  IndistParams params;
  double sigma = 0.0;
  double grid_step = 0.0;
  std::vector<TouchedPair> touched;
  double worst_touched_delta = 0.0;
  bool touched_pass = false;  // every touched pair at (eps, delta + slack)
  double sd_threshold = 0.0;
  double mass_at_threshold = 0.0;  // under A(1^n), SD >= threshold
  bool game1_uniform = false;      // Game-1 posterior exactly (1/2, 1/2)
  double max_log_ratio_error = 0.0;
  double predicted_log_ratio_at_n = 0.0;
  double predicted_log_ratio_at_n_alt = 0.0;
  double observed_log_ratio_at_n = 0.0;
  std::vector<CounterexampleRow> rows;
};

// Gaussian sum on {0,1}^n with sigma^2 = log_b(1/delta) / eps^2, uniform
// prior over {0^n, (1,0,...,0)} and real database 1^n.
absl::StatusOr<CounterexampleReport> RunCounterexample(
    int n, double epsilon, double delta,
    const CounterexampleOptions& options = {});

}  // namespace semdp

#endif  // SEMDP_VERIFIERS_H_
