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

#include "semdp/indistinguishability.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

// sum_a (p_a - scale q_a)^+, with scale = +inf meaning "mass of p where q = 0".
double HockeyStick(std::span<const double> p, std::span<const double> q,
                   double scale) {
  std::vector<double> terms;
  terms.reserve(p.size());
  for (size_t a = 0; a < p.size(); ++a) {
    if (std::isinf(scale)) {
      if (q[a] == 0.0) terms.push_back(p[a]);
      continue;
    }
    const double excess = p[a] - scale * q[a];
    if (excess > 0.0) terms.push_back(excess);
  }
  return CompensatedSum(terms);
}

bool IsBad(double px, double py, double ratio_bound) {
  if (px == 0.0 && py == 0.0) return false;
  const double upper = ratio_bound * (1.0 + kRatioSlack);
  return px > upper * py || py > upper * px;
}

}  // namespace

absl::StatusOr<IndistParams> IndistParams::Create(double epsilon,
                                                  double delta) {
  if (!(epsilon >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be nonnegative, got ", epsilon));
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in [0,1], got ", delta));
  }
  return IndistParams{epsilon, delta};
}

double StatisticalDifference(const Distribution& p, const Distribution& q) {
  const AlignedPair aligned = Align(p, q);
  std::vector<double> diffs(aligned.p.size());
  for (size_t a = 0; a < diffs.size(); ++a) {
    diffs[a] = std::abs(aligned.p[a] - aligned.q[a]);
  }
  return std::clamp(0.5 * CompensatedSum(diffs), 0.0, 1.0);
}

double TightDelta(std::span<const double> p, std::span<const double> q,
                  double epsilon) {
  const double scale = std::exp(epsilon);
  return std::clamp(
      std::max(HockeyStick(p, q, scale), HockeyStick(q, p, scale)), 0.0, 1.0);
}

absl::StatusOr<double> TightDeltaAt(const Distribution& p,
                                    const Distribution& q, double epsilon) {
  if (!(epsilon >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be nonnegative, got ", epsilon));
  }
  const AlignedPair aligned = Align(p, q);
  return TightDelta(aligned.p, aligned.q, epsilon);
}

bool IsIndistinguishable(std::span<const double> p, std::span<const double> q,
                         const IndistParams& params) {
  return TightDelta(p, q, params.epsilon) <= params.delta + kDeltaTolerance;
}

bool IsIndistinguishable(const Distribution& p, const Distribution& q,
                         const IndistParams& params) {
  const AlignedPair aligned = Align(p, q);
  return IsIndistinguishable(aligned.p, aligned.q, params);
}

PointwiseReport PointwiseCheck(std::span<const double> p,
                               std::span<const double> q,
                               const IndistParams& params,
                               const OutcomeSet& labels) {
  const double ratio_bound = std::exp(params.epsilon);
  PointwiseReport report;
  std::vector<double> mass_x;
  std::vector<double> mass_y;
  for (size_t a = 0; a < p.size(); ++a) {
    if (!IsBad(p[a], q[a], ratio_bound)) continue;
    report.bad_outcomes.push_back(labels.label(a));
    mass_x.push_back(p[a]);
    mass_y.push_back(q[a]);
  }
  report.bad_mass_x = std::clamp(CompensatedSum(mass_x), 0.0, 1.0);
  report.bad_mass_y = std::clamp(CompensatedSum(mass_y), 0.0, 1.0);
  return report;
}

PointwiseReport PointwiseCheck(const Distribution& p, const Distribution& q,
                               const IndistParams& params) {
  const AlignedPair aligned = Align(p, q);
  return PointwiseCheck(aligned.p, aligned.q, params, *aligned.outcomes);
}

IndistParams PointwiseToIndist(const IndistParams& params) { return params; }

absl::StatusOr<IndistParams> IndistToPointwise(const IndistParams& params) {
  if (!(params.epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        "point-wise conversion is undefined at epsilon = 0");
  }
  return IndistParams{
      2.0 * params.epsilon,
      2.0 * params.delta / (std::exp(params.epsilon) * params.epsilon)};
}

absl::StatusOr<Channel> Channel::Create(
    std::map<std::string, Distribution> rows) {
  if (rows.empty()) return absl::InvalidArgumentError("channel has no rows");
  std::shared_ptr<const OutcomeSet> targets =
      rows.begin()->second.outcome_set();
  for (const auto& [source, row] : rows) {
    if (!row.outcomes().SameLabelsAs(*targets)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "channel row '", source, "' uses a different target outcome set"));
    }
  }
  return Channel(std::move(rows), std::move(targets));
}

const Distribution* Channel::RowFor(const std::string& source) const {
  auto it = rows_.find(source);
  return it == rows_.end() ? nullptr : &it->second;
}

absl::StatusOr<Distribution> Postprocess(const Distribution& p,
                                         const Channel& channel) {
  std::vector<std::vector<double>> columns(channel.targets().size());
  for (size_t a = 0; a < p.size(); ++a) {
    if (p[a] == 0.0) continue;
    const std::string& label = p.outcomes().label(a);
    const Distribution* row = channel.RowFor(label);
    if (row == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("channel has no row for outcome '", label, "'"));
    }
    for (size_t b = 0; b < row->size(); ++b) {
      columns[b].push_back(p[a] * (*row)[b]);
    }
  }
  std::vector<double> out(columns.size());
  for (size_t b = 0; b < columns.size(); ++b) {
    out[b] = CompensatedSum(columns[b]);
  }
  std::vector<std::string> labels = channel.targets().labels();
  return Distribution::Create(std::move(labels), std::move(out));
}

absl::StatusOr<JointPair> PairWithInput(
    const Distribution& prior,
    const std::map<std::string, Distribution>& rows_a,
    const std::map<std::string, Distribution>& rows_b) {
  if (rows_a.size() != prior.size() || rows_b.size() != prior.size()) {
    return absl::InvalidArgumentError(
        "row families must be indexed by exactly the prior's outcomes");
  }
  std::vector<std::string> output_labels;
  absl::flat_hash_map<std::string, size_t> output_index;
  auto add_outputs = [&](const Distribution& row) {
    for (const std::string& label : row.outcomes().labels()) {
      if (output_index.emplace(label, output_labels.size()).second) {
        output_labels.push_back(label);
      }
    }
  };
  for (const std::string& index : prior.outcomes().labels()) {
    auto a = rows_a.find(index);
    auto b = rows_b.find(index);
    if (a == rows_a.end() || b == rows_b.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("no row for prior index '", index, "'"));
    }
    add_outputs(a->second);
    add_outputs(b->second);
  }
  ASSIGN_OR_RETURN(auto outputs, OutcomeSet::Create(std::move(output_labels)));
  const size_t width = outputs->size();
  std::vector<double> first(prior.size() * width, 0.0);
  std::vector<double> second(prior.size() * width, 0.0);
  for (size_t i = 0; i < prior.size(); ++i) {
    const std::string& index = prior.outcomes().label(i);
    const Distribution& row_a = rows_a.at(index);
    const Distribution& row_b = rows_b.at(index);
    for (size_t t = 0; t < row_a.size(); ++t) {
      first[i * width + *outputs->IndexOf(row_a.outcomes().label(t))] =
          prior[i] * row_a[t];
    }
    for (size_t t = 0; t < row_b.size(); ++t) {
      second[i * width + *outputs->IndexOf(row_b.outcomes().label(t))] =
          prior[i] * row_b[t];
    }
  }
  ASSIGN_OR_RETURN(
      JointTable joint_a,
      JointTable::Create(prior.outcome_set(), outputs, std::move(first)));
  ASSIGN_OR_RETURN(
      JointTable joint_b,
      JointTable::Create(prior.outcome_set(), outputs, std::move(second)));
  return JointPair{std::move(joint_a), std::move(joint_b)};
}

double SdBoundFromIndist(const IndistParams& params) {
  return EpsilonBar(params.epsilon) + params.delta;
}

double EpsilonBar(double epsilon) { return std::expm1(epsilon); }

double SemanticEpsilon(const IndistParams& params) {
  return std::expm1(3.0 * params.epsilon) + 2.0 * std::sqrt(params.delta);
}

double ConditionalEpsilon(const IndistParams& params) {
  return 3.0 * params.epsilon;
}

double ConditionalDelta(const IndistParams& params) {
  return 2.0 * std::sqrt(params.delta);
}

absl::StatusOr<double> ConditionalFailureMass(const IndistParams& params) {
  if (!(params.epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        "failure-mass bound divides by epsilon; epsilon must be positive");
  }
  return std::sqrt(params.delta) +
         2.0 * params.delta / (params.epsilon * std::exp(params.epsilon));
}

absl::StatusOr<double> SemanticDelta(int n, const IndistParams& params) {
  if (n < 1) return absl::InvalidArgumentError("n must be positive");
  ASSIGN_OR_RETURN(double per_coordinate, ConditionalFailureMass(params));
  return n * per_coordinate;
}

}  // namespace semdp
