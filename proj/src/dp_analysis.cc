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

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using RowPtr = std::shared_ptr<const MechanismRow>;

struct PairRows {
  const NeighborPair* pair;
  RowPtr x;
  RowPtr y;
};

absl::StatusOr<std::vector<NeighborPair>> ResolvePairs(
    const Mechanism& m, std::optional<std::span<const NeighborPair>> pairs) {
  if (!pairs.has_value()) {
    if (!m.space().IsEnumerable()) {
      return absl::FailedPreconditionError(
          "database space is too large to enumerate; supply neighbor pairs");
    }
    return AllNeighborPairs(m.space());
  }
  for (const NeighborPair& p : *pairs) {
    RETURN_IF_ERROR(m.space().Validate(p.x));
    RETURN_IF_ERROR(m.space().Validate(p.y));
    if (HammingDistance(p.x, p.y) != 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("pair (", m.space().Format(p.x), "), (",
                       m.space().Format(p.y), ") are not neighbors"));
    }
  }
  return std::vector<NeighborPair>(pairs->begin(), pairs->end());
}

absl::StatusOr<std::vector<PairRows>> FetchRows(
    const Mechanism& m, const std::vector<NeighborPair>& pairs) {
  std::vector<PairRows> out;
  out.reserve(pairs.size());
  for (const NeighborPair& p : pairs) {
    ASSIGN_OR_RETURN(RowPtr x, m.Row(p.x));
    ASSIGN_OR_RETURN(RowPtr y, m.Row(p.y));
    out.push_back(PairRows{&p, std::move(x), std::move(y)});
  }
  return out;
}

double PairEpsilon(const MechanismRow& x, const MechanismRow& y) {
  double worst = 0.0;
  for (size_t t = 0; t < x.log_probs.size(); ++t) {
    const double lx = x.log_probs[t];
    const double ly = y.log_probs[t];
    if (lx == kNegInf && ly == kNegInf) continue;
    if (lx == kNegInf || ly == kNegInf) return kInf;
    worst = std::max(worst, std::abs(lx - ly));
  }
  return worst;
}

double MaxTightDelta(const std::vector<PairRows>& rows, double epsilon,
                     std::optional<NeighborPair>* worst) {
  double best = 0.0;
  for (const PairRows& pr : rows) {
    const double d = TightDelta(pr.x->probs, pr.y->probs, epsilon);
    if (d > best || (worst != nullptr && !worst->has_value())) {
      best = std::max(best, d);
      if (worst != nullptr) *worst = *pr.pair;
    }
  }
  return best;
}

}  // namespace

absl::StatusOr<std::vector<NeighborPair>> AllNeighborPairs(
    const DatabaseSpace& space, uint64_t cap) {
  ASSIGN_OR_RETURN(std::vector<Database> all, space.Enumerate(cap));
  std::vector<NeighborPair> out;
  for (const Database& x : all) {
    ASSIGN_OR_RETURN(std::vector<Database> neighbors, Neighbors(space, x));
    for (Database& y : neighbors) {
      if (x < y) out.push_back(NeighborPair{x, std::move(y)});
    }
  }
  return out;
}

absl::StatusOr<EpsilonMaxResult> EpsilonMax(
    const Mechanism& m, std::optional<std::span<const NeighborPair>> pairs) {
  ASSIGN_OR_RETURN(std::vector<NeighborPair> resolved, ResolvePairs(m, pairs));
  ASSIGN_OR_RETURN(std::vector<PairRows> rows, FetchRows(m, resolved));
  EpsilonMaxResult result;
  for (const PairRows& pr : rows) {
    const double e = PairEpsilon(*pr.x, *pr.y);
    if (e > result.epsilon || !result.worst.has_value()) {
      result.epsilon = std::max(result.epsilon, e);
      result.worst = *pr.pair;
    }
    if (std::isinf(result.epsilon)) break;
  }
  return result;
}

absl::StatusOr<DpReport> TightDeltaCurve(
    const Mechanism& m, std::span<const double> epsilons,
    std::optional<std::span<const NeighborPair>> pairs,
    std::optional<IndistParams> pointwise_params) {
  for (double e : epsilons) {
    if (!(e >= 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("epsilon must be nonnegative, got ", e));
    }
  }
  ASSIGN_OR_RETURN(std::vector<NeighborPair> resolved, ResolvePairs(m, pairs));
  ASSIGN_OR_RETURN(std::vector<PairRows> rows, FetchRows(m, resolved));
  DpReport report;
  for (const PairRows& pr : rows) {
    const double e = PairEpsilon(*pr.x, *pr.y);
    if (e > report.epsilon_max.epsilon || !report.epsilon_max.worst) {
      report.epsilon_max.epsilon = std::max(report.epsilon_max.epsilon, e);
      report.epsilon_max.worst = *pr.pair;
    }
  }
  for (double e : epsilons) {
    DeltaPoint point;
    point.epsilon = e;
    point.delta = MaxTightDelta(rows, e, &point.worst);
    report.delta_at.push_back(std::move(point));
  }
  if (pointwise_params.has_value() && !rows.empty()) {
    std::optional<NeighborPair> worst;
    MaxTightDelta(rows, pointwise_params->epsilon, &worst);
    for (const PairRows& pr : rows) {
      if (pr.pair->x == worst->x && pr.pair->y == worst->y) {
        report.pointwise = PointwiseCheck(pr.x->probs, pr.y->probs,
                                          *pointwise_params, m.transcripts());
        break;
      }
    }
    report.pointwise_params = pointwise_params;
  }
  return report;
}

absl::StatusOr<double> EpsilonForDelta(
    const Mechanism& m, double delta,
    std::optional<std::span<const NeighborPair>> pairs) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError("delta must lie in [0,1]");
  }
  ASSIGN_OR_RETURN(std::vector<NeighborPair> resolved, ResolvePairs(m, pairs));
  ASSIGN_OR_RETURN(std::vector<PairRows> rows, FetchRows(m, resolved));
  auto delta_at = [&](double e) { return MaxTightDelta(rows, e, nullptr); };
  if (delta_at(0.0) <= delta + kDeltaTolerance) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (delta_at(hi) > delta + kDeltaTolerance) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) return kInf;
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (delta_at(mid) > delta + kDeltaTolerance) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

absl::StatusOr<std::vector<Database>> GoodSet(const Mechanism& m,
                                              const IndistParams& params) {
  if (!m.space().IsEnumerable()) {
    return absl::FailedPreconditionError(
        "good set needs an enumerable database space");
  }
  ASSIGN_OR_RETURN(std::vector<NeighborPair> pairs,
                   AllNeighborPairs(m.space()));
  absl::flat_hash_set<Database> bad;
  for (const NeighborPair& p : pairs) {
    ASSIGN_OR_RETURN(RowPtr x, m.Row(p.x));
    ASSIGN_OR_RETURN(RowPtr y, m.Row(p.y));
    if (!IsIndistinguishable(x->probs, y->probs, params)) {
      bad.insert(p.x);
      bad.insert(p.y);
    }
  }
  ASSIGN_OR_RETURN(std::vector<Database> all, m.space().Enumerate());
  std::vector<Database> good;
  for (Database& x : all) {
    if (!bad.contains(x)) good.push_back(std::move(x));
  }
  return good;
}

absl::StatusOr<ExtractionReport> SemanticToDpExtraction(
    const Mechanism& m, double epsilon_bar, double delta,
    std::optional<std::span<const NeighborPair>> pairs) {
  if (!(epsilon_bar >= 0.0) || std::isinf(epsilon_bar)) {
    return absl::InvalidArgumentError("epsilon_bar must be finite and >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError("delta must lie in [0,1]");
  }
  ASSIGN_OR_RETURN(std::vector<NeighborPair> resolved, ResolvePairs(m, pairs));
  ASSIGN_OR_RETURN(std::vector<PairRows> rows, FetchRows(m, resolved));

  ExtractionReport report;
  report.epsilon = std::log1p(epsilon_bar);
  report.claimed =
      IndistParams{2.0 * report.epsilon, std::min(1.0, 2.0 * delta)};
  report.range_warning = epsilon_bar >= 1.0;
  report.bayes_epsilon =
      epsilon_bar < 1.0 ? std::log((1.0 + epsilon_bar) / (1.0 - epsilon_bar))
                        : kInf;
  report.premise_holds = true;
  report.claim_certified = true;
  const double allowed_loss = epsilon_bar / 2.0;
  for (const PairRows& pr : rows) {
    // Uniform prior on {x, y}. Under the game blanking the differing
    // coordinate both rows coincide, so that posterior stays (1/2, 1/2).
    std::vector<double> exceeding;
    for (size_t t = 0; t < pr.x->probs.size(); ++t) {
      const double lx = pr.x->log_probs[t];
      const double ly = pr.y->log_probs[t];
      if (lx == kNegInf && ly == kNegInf) continue;
      const double posterior_x = 1.0 / (1.0 + std::exp(ly - lx));
      const double loss = std::abs(posterior_x - 0.5);
      report.max_two_point_loss = std::max(report.max_two_point_loss, loss);
      if (loss > allowed_loss + kRatioSlack) {
        exceeding.push_back(0.5 * (pr.x->probs[t] + pr.y->probs[t]));
      }
    }
    const double mass = CompensatedSum(exceeding);
    const bool premise = mass <= delta + kDeltaTolerance;
    const bool claim =
        PointwiseCheck(pr.x->probs, pr.y->probs, report.claimed,
                       m.transcripts())
            .Passes(report.claimed.delta) &&
        IsIndistinguishable(pr.x->probs, pr.y->probs, report.claimed);
    if (mass > report.worst_premise_mass ||
        (!claim && report.claim_certified)) {
      report.worst_pair = *pr.pair;
    }
    report.worst_premise_mass = std::max(report.worst_premise_mass, mass);
    report.premise_holds = report.premise_holds && premise;
    report.claim_certified = report.claim_certified && claim;
  }
  return report;
}

}  // namespace semdp
