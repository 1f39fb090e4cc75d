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

#ifndef SEMDP_DP_ANALYSIS_H_
#define SEMDP_DP_ANALYSIS_H_

#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "semdp/database.h"
#include "semdp/indistinguishability.h"
#include "semdp/mechanism.h"

namespace semdp {

struct NeighborPair {
  Database x;
  Database y;
};

// Unordered neighbor pairs {x, y} with x < y, in enumeration order.
absl::StatusOr<std::vector<NeighborPair>> AllNeighborPairs(
    const DatabaseSpace& space, uint64_t cap = kDefaultEnumerationCap);

struct EpsilonMaxResult {
  double epsilon = 0.0;  // may be +infinity
  std::optional<NeighborPair> worst;
};

struct DeltaPoint {
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<NeighborPair> worst;
};

struct DpReport {
  EpsilonMaxResult epsilon_max;
  std::vector<DeltaPoint> delta_at;
  // Point-wise check of the pair attaining the largest delta, when requested.
  std::optional<IndistParams> pointwise_params;
  std::optional<PointwiseReport> pointwise;
};

// Largest |log(Pr[A(x)=t] / Pr[A(y)=t])| over neighbor pairs and transcripts
// with both probabilities positive; +infinity when some transcript is
// possible under exactly one side. Without `pairs`, the space is enumerated.
absl::StatusOr<EpsilonMaxResult> EpsilonMax(
    const Mechanism& m,
    std::optional<std::span<const NeighborPair>> pairs = std::nullopt);

absl::StatusOr<DpReport> TightDeltaCurve(
    const Mechanism& m, std::span<const double> epsilons,
    std::optional<std::span<const NeighborPair>> pairs = std::nullopt,
    std::optional<IndistParams> pointwise_params = std::nullopt);

// Smallest epsilon whose tight delta over all pairs is at most `delta`,
// found by bisection to 1e-9 on the monotone curve.
absl::StatusOr<double> EpsilonForDelta(
    const Mechanism& m, double delta,
    std::optional<std::span<const NeighborPair>> pairs = std::nullopt);

// Databases all of whose neighbor row pairs are (eps, delta)-indistinguishable.
absl::StatusOr<std::vector<Database>> GoodSet(const Mechanism& m,
                                              const IndistParams& params);

// Outcome of checking (ebar/2, delta)-semantic privacy on uniform two-point
// neighbor priors and the (2 eps, 2 delta) conclusion, with eps = ln(1+ebar).
struct ExtractionReport {
  IndistParams claimed;  // (2 eps, 2 delta)
  double epsilon = 0.0;
  bool premise_holds = false;
  bool claim_certified = false;
  double max_two_point_loss = 0.0;
  // Largest mass, over pairs, of transcripts with loss above ebar / 2.
  double worst_premise_mass = 0.0;
  // Log-ratio bound that Bayes' rule gives from a loss of ebar / 2:
  // ln((1 + ebar) / (1 - ebar)); +infinity when ebar >= 1.
  double bayes_epsilon = 0.0;
  // ebar >= 1: the two-point posterior gives no finite ratio bound.
  bool range_warning = false;
  std::optional<NeighborPair> worst_pair;
};

absl::StatusOr<ExtractionReport> SemanticToDpExtraction(
    const Mechanism& m, double epsilon_bar, double delta,
    std::optional<std::span<const NeighborPair>> pairs = std::nullopt);

}  // namespace semdp

#endif  // SEMDP_DP_ANALYSIS_H_
