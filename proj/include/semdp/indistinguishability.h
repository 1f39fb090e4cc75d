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

#ifndef SEMDP_INDISTINGUISHABILITY_H_
#define SEMDP_INDISTINGUISHABILITY_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "semdp/distribution.h"

namespace semdp {

// Slack added to delta when deciding (eps, delta)-indistinguishability.
inline constexpr double kDeltaTolerance = 1e-12;
// Relative slack on e^eps before an outcome ratio counts as a violation.
inline constexpr double kRatioSlack = 1e-12;

struct IndistParams {
  double epsilon = 0.0;
  double delta = 0.0;

  static absl::StatusOr<IndistParams> Create(double epsilon, double delta);
};

// Outcomes whose likelihood ratio leaves [e^-eps, e^eps], with their mass
// under each side. Outcomes with zero probability on both sides are never bad.
struct PointwiseReport {
  double bad_mass_x = 0.0;
  double bad_mass_y = 0.0;
  std::vector<std::string> bad_outcomes;

  bool Passes(double delta) const {
    return bad_mass_x <= delta + kDeltaTolerance &&
           bad_mass_y <= delta + kDeltaTolerance;
  }
};

// Total variation distance, (1/2) sum |p_a - q_a|.
double StatisticalDifference(const Distribution& p, const Distribution& q);

// Smallest delta making (p, q) (eps, delta)-indistinguishable. The optimizing
// event is {a : p_a > e^eps q_a} (or its mirror), so this is
//   max(sum_a (p_a - e^eps q_a)^+, sum_a (q_a - e^eps p_a)^+).
absl::StatusOr<double> TightDeltaAt(const Distribution& p,
                                    const Distribution& q, double epsilon);

// Same, for vectors already aligned over one outcome set. `epsilon` may be
// +infinity, in which case the result is 0.
double TightDelta(std::span<const double> p, std::span<const double> q,
                  double epsilon);

bool IsIndistinguishable(const Distribution& p, const Distribution& q,
                         const IndistParams& params);
bool IsIndistinguishable(std::span<const double> p, std::span<const double> q,
                         const IndistParams& params);

PointwiseReport PointwiseCheck(const Distribution& p, const Distribution& q,
                               const IndistParams& params);
// Aligned variant; bad outcomes are reported as indices rendered by `labels`.
PointwiseReport PointwiseCheck(std::span<const double> p,
                               std::span<const double> q,
                               const IndistParams& params,
                               const OutcomeSet& labels);

// Point-wise (eps, delta) implies set-form (eps, delta): identity on params.
IndistParams PointwiseToIndist(const IndistParams& params);

// Set-form (eps, delta) to the point-wise parameters (2 eps, 2 delta /
// (e^eps eps)). Undefined at eps = 0.
absl::StatusOr<IndistParams> IndistToPointwise(const IndistParams& params);

// A stochastic map from source outcome labels to distributions over a common
// target outcome set.
class Channel {
 public:
  static absl::StatusOr<Channel> Create(
      std::map<std::string, Distribution> rows);

  const OutcomeSet& targets() const { return *targets_; }
  const Distribution* RowFor(const std::string& source) const;

 private:
  Channel(std::map<std::string, Distribution> rows,
          std::shared_ptr<const OutcomeSet> targets)
      : rows_(std::move(rows)), targets_(std::move(targets)) {}

  std::map<std::string, Distribution> rows_;
  std::shared_ptr<const OutcomeSet> targets_;
};

// Pushforward of `p` through `channel`.
absl::StatusOr<Distribution> Postprocess(const Distribution& p,
                                         const Channel& channel);

// The joints (X, A(X)) and (X, A'(X)) over (index, transcript) pairs.
struct JointPair {
  JointTable first;
  JointTable second;
};

// `rows_a` and `rows_b` must be keyed by exactly the outcome labels of
// `prior`. Row outcome sets are unioned into the joint output set.
absl::StatusOr<JointPair> PairWithInput(
    const Distribution& prior,
    const std::map<std::string, Distribution>& rows_a,
    const std::map<std::string, Distribution>& rows_b);

// SD(X, Y) <= (e^eps - 1) + delta for (eps, delta)-indistinguishable X, Y.
double SdBoundFromIndist(const IndistParams& params);

// Derived constants used by the semantic-privacy theorems.
double EpsilonBar(double epsilon);  // e^eps - 1
double SemanticEpsilon(
    const IndistParams& params);  // e^{3eps} - 1 + 2 sqrt(delta)
double ConditionalEpsilon(const IndistParams& params);  // 3 eps
double ConditionalDelta(const IndistParams& params);    // 2 sqrt(delta)
// sqrt(delta) + 2 delta / (eps e^eps); requires eps > 0.
absl::StatusOr<double> ConditionalFailureMass(const IndistParams& params);
// n * ConditionalFailureMass(params).
absl::StatusOr<double> SemanticDelta(int n, const IndistParams& params);

}  // namespace semdp

#endif  // SEMDP_INDISTINGUISHABILITY_H_
