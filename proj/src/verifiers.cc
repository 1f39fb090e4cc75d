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
#include <limits>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "semdp/dp_analysis.h"
#include "semdp/noise.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double Sum(const std::vector<double>& values) { return CompensatedSum(values); }

}  // namespace

double ConditionalReport::Margin() const {
  return bound - std::max(failure_mass_first, failure_mass_second);
}

double ConditionalReport::SdMargin() const {
  return bound - std::max(sd_failure_mass_first, sd_failure_mass_second);
}

absl::StatusOr<ConditionalReport> VerifyConditionalIndist(
    const JointTable& first, const JointTable& second,
    const IndistParams& params) {
  if (!first.inputs().SameLabelsAs(second.inputs()) ||
      !first.outputs().SameLabelsAs(second.outputs())) {
    return absl::InvalidArgumentError(
        "joint tables must share input and transcript labels");
  }
  ConditionalReport report;
  report.params = params;
  ASSIGN_OR_RETURN(report.bound, ConditionalFailureMass(params));
  report.conditional =
      IndistParams{ConditionalEpsilon(params), ConditionalDelta(params)};
  report.sd_bound = SemanticEpsilon(params);
  report.premise = IsIndistinguishable(first.probs(), second.probs(), params);

  const std::vector<double> marginal_first = first.OutputMarginal();
  const std::vector<double> marginal_second = second.OutputMarginal();
  std::vector<double> fail_first, fail_second, sd_fail_first, sd_fail_second;
  for (size_t t = 0; t < first.num_outputs(); ++t) {
    const double mx = marginal_first[t];
    const double my = marginal_second[t];
    if (mx <= 0.0 && my <= 0.0) {
      ++report.skipped_transcripts;
      continue;
    }
    bool fails = true;
    bool sd_fails = true;
    if (mx > 0.0 && my > 0.0) {
      ASSIGN_OR_RETURN(Distribution cx, first.InputGivenOutput(t));
      ASSIGN_OR_RETURN(Distribution cy, second.InputGivenOutput(t));
      fails = !IsIndistinguishable(cx, cy, report.conditional);
      sd_fails = StatisticalDifference(cx, cy) >
                 report.sd_bound * (1.0 + kRatioSlack) + kDeltaTolerance;
    }
    if (fails) {
      fail_first.push_back(mx);
      fail_second.push_back(my);
    }
    if (sd_fails) {
      sd_fail_first.push_back(mx);
      sd_fail_second.push_back(my);
    }
  }
  report.failure_mass_first = Sum(fail_first);
  report.failure_mass_second = Sum(fail_second);
  report.sd_failure_mass_first = Sum(sd_fail_first);
  report.sd_failure_mass_second = Sum(sd_fail_second);
  return report;
}

absl::StatusOr<JointTable> PriorJoint(const Mechanism& m,
                                      const BeliefPrior& prior) {
  std::vector<std::string> labels;
  std::vector<double> probs;
  const size_t k = m.transcripts().size();
  probs.reserve(prior.size() * k);
  for (size_t i = 0; i < prior.size(); ++i) {
    const Database& x = prior.support()[i];
    labels.push_back(m.space().Format(x));
    ASSIGN_OR_RETURN(auto row, m.Row(x));
    for (size_t t = 0; t < k; ++t) {
      probs.push_back(prior.weights()[i] * row->probs[t]);
    }
  }
  ASSIGN_OR_RETURN(auto inputs, OutcomeSet::Create(std::move(labels)));
  return JointTable::Create(std::move(inputs), m.transcript_set(),
                            std::move(probs));
}

absl::StatusOr<SemanticBoundCheck> CheckSemanticBound(
    const SemanticReport& report, int n, const IndistParams& params) {
  SemanticBoundCheck check;
  check.epsilon_prime = SemanticEpsilon(params);
  ASSIGN_OR_RETURN(check.delta_prime, SemanticDelta(n, params));
  check.mass = report.MassExceeding(check.epsilon_prime);
  check.epsilon_star = report.epsilon_star;
  return check;
}

absl::StatusOr<GoodSetReport> VerifyGoodSetBound(const Mechanism& m,
                                                 const IndistParams& params,
                                                 const BeliefPrior& prior) {
  GoodSetReport report;
  report.params = params;
  ASSIGN_OR_RETURN(std::vector<Database> good, GoodSet(m, params));
  report.good_set_size = good.size();
  absl::flat_hash_set<Database> in_good(good.begin(), good.end());
  std::vector<double> mass;
  for (size_t k = 0; k < prior.size(); ++k) {
    if (in_good.contains(prior.support()[k])) {
      mass.push_back(prior.weights()[k]);
    }
  }
  report.prior_good_mass = CompensatedSum(mass);
  report.applicable =
      report.prior_good_mass >= 1.0 - params.delta - kDeltaTolerance;
  if (!report.applicable) return report;
  ASSIGN_OR_RETURN(SemanticReport semantic, ComputeSemanticReport(m, prior));
  ASSIGN_OR_RETURN(report.check,
                   CheckSemanticBound(semantic, m.space().n(), params));
  return report;
}

absl::StatusOr<CounterexampleReport> RunCounterexample(
    int n, double epsilon, double delta, const CounterexampleOptions& options) {
  if (n < 2) return absl::InvalidArgumentError("n must be at least 2");
  if (!(options.step_fraction > 0.0 && options.step_fraction <= 0.5)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "grid step must be a positive fraction of sigma no larger than 1/2, "
        "got ",
        options.step_fraction));
  }
  ASSIGN_OR_RETURN(IndistParams params, IndistParams::Create(epsilon, delta));
  ASSIGN_OR_RETURN(double sigma,
                   GaussianSigma(epsilon, delta, options.log_base));
  ASSIGN_OR_RETURN(DatabaseSpace space, DatabaseSpace::Create({"0", "1"}, n));
  ASSIGN_OR_RETURN(
      NoiseSpec noise,
      NoiseSpec::Create(NoiseKind::kGaussian, sigma,
                        sigma * options.step_fraction, options.tail_mass));
  ASSIGN_OR_RETURN(Mechanism m, MakeNoisySum(space, noise));

  CounterexampleReport report;
  report.n = n;
  report.params = params;
  report.sigma = sigma;
  report.grid_step = noise.grid_step;
  report.sd_threshold = options.sd_threshold;

  const Database zeros = space.Constant(0);
  Database first = zeros;
  first.Set(0, 1);
  const Database ones = space.Constant(1);

  std::vector<NeighborPair> pairs = {{zeros, first}};
  for (int i = 1; i <= n; ++i) {
    ASSIGN_OR_RETURN(Database y, Suppress(space, ones, i));
    pairs.push_back({ones, std::move(y)});
  }
  report.touched_pass = true;
  for (const NeighborPair& pair : pairs) {
    ASSIGN_OR_RETURN(auto rx, m.Row(pair.x));
    ASSIGN_OR_RETURN(auto ry, m.Row(pair.y));
    const double d = TightDelta(rx->probs, ry->probs, epsilon);
    report.worst_touched_delta = std::max(report.worst_touched_delta, d);
    report.touched_pass =
        report.touched_pass && d <= delta + options.delta_slack;
    report.touched.push_back({pair.x, pair.y, d});
  }

  ASSIGN_OR_RETURN(BeliefPrior prior,
                   BeliefPrior::Uniform(space, {zeros, first}));
  ASSIGN_OR_RETURN(SemanticReport semantic,
                   ComputeRealityObliviousReport(m, prior, ones));
  ASSIGN_OR_RETURN(Mechanism game1, GameMechanism(m, 1));
  ASSIGN_OR_RETURN(auto row_zeros, m.Row(zeros));
  ASSIGN_OR_RETURN(auto row_first, m.Row(first));

  ASSIGN_OR_RETURN(NoiseGrid grid,
                   MakeNoiseGrid(noise, 0.0, static_cast<double>(n)));

  const double two_var = 2.0 * sigma * sigma;
  report.predicted_log_ratio_at_n = (2.0 * n - 1.0) / two_var;
  report.predicted_log_ratio_at_n_alt = (2.0 * n - 1.0) / (2.0 * sigma);
  report.game1_uniform = true;
  std::vector<double> heavy;
  double nearest = std::numeric_limits<double>::infinity();
  const size_t cells = m.transcripts().size();
  for (size_t t = 0; t < cells; ++t) {
    const TranscriptSemantics& entry = semantic.transcripts[t];
    CounterexampleRow row;
    row.transcript = m.transcripts().label(t);
    row.midpoint = grid.Midpoint(t);
    row.prob_real_db = entry.prob_real_db;
    const double lx = row_zeros->log_probs[t];
    const double ly = row_first->log_probs[t];
    const double log_ratio = ly - lx;
    row.ratio = std::exp(log_ratio);
    row.predicted_ratio = std::exp((2.0 * row.midpoint - 1.0) / two_var);
    row.predicted_ratio_alt =
        std::exp((2.0 * row.midpoint - 1.0) / (2.0 * sigma));
    if (lx != kNegInf || ly != kNegInf) {
      row.posterior_x0 = 1.0 / (1.0 + std::exp(log_ratio));
    }
    ASSIGN_OR_RETURN(std::vector<double> game_posterior,
                     PosteriorWeights(game1, prior, t));
    row.posterior_game1_x0 = game_posterior[0];
    report.game1_uniform = report.game1_uniform && game_posterior[0] == 0.5 &&
                           game_posterior[1] == 0.5;
    row.sd_game1 = entry.defined ? entry.sd_by_game[0] : 0.0;
    if (row.sd_game1 >= options.sd_threshold) heavy.push_back(row.prob_real_db);
    // End cells absorb the tails and do not follow the density ratio.
    if (t > 0 && t + 1 < cells) {
      report.max_log_ratio_error =
          std::max(report.max_log_ratio_error,
                   std::abs(log_ratio - (2.0 * row.midpoint - 1.0) / two_var));
    }
    if (std::abs(row.midpoint - n) < nearest) {
      nearest = std::abs(row.midpoint - n);
      report.observed_log_ratio_at_n = log_ratio;
    }
    report.rows.push_back(std::move(row));
  }
  report.mass_at_threshold = CompensatedSum(heavy);
  return report;
}

}  // namespace semdp
