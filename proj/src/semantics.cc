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

#include "semdp/semantics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Normalized exp(log_weights), or nullopt if every weight is zero.
std::optional<std::vector<double>> Softmax(const std::vector<double>& logw) {
  const double top = *std::max_element(logw.begin(), logw.end());
  if (top == kNegInf) return std::nullopt;
  std::vector<double> out(logw.size());
  for (size_t k = 0; k < logw.size(); ++k) out[k] = std::exp(logw[k] - top);
  const double total = CompensatedSum(out);
  for (double& v : out) v /= total;
  return out;
}

double SupportSd(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> diffs(a.size());
  for (size_t k = 0; k < a.size(); ++k) diffs[k] = std::abs(a[k] - b[k]);
  return std::clamp(0.5 * CompensatedSum(diffs), 0.0, 1.0);
}

using RowPtr = std::shared_ptr<const MechanismRow>;

absl::StatusOr<std::vector<RowPtr>> SupportRows(const Mechanism& m,
                                                const BeliefPrior& prior) {
  std::vector<RowPtr> rows;
  rows.reserve(prior.size());
  for (const Database& x : prior.support()) {
    ASSIGN_OR_RETURN(RowPtr row, m.Row(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> LogLikelihoods(const std::vector<RowPtr>& rows,
                                   const std::vector<double>& log_prior,
                                   size_t t) {
  std::vector<double> out(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    out[k] = log_prior[k] == kNegInf ? kNegInf
                                     : rows[k]->log_probs[t] + log_prior[k];
  }
  return out;
}

std::vector<double> LogPrior(const BeliefPrior& prior) {
  std::vector<double> out;
  out.reserve(prior.size());
  for (double w : prior.weights()) out.push_back(std::log(w));
  return out;
}

absl::StatusOr<size_t> TranscriptIndex(const Mechanism& m,
                                       const std::string& transcript) {
  auto t = m.transcripts().IndexOf(transcript);
  if (!t.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown transcript '", transcript, "'"));
  }
  return *t;
}

Distribution SupportDistribution(const Mechanism& m, const BeliefPrior& prior,
                                 std::vector<double> weights) {
  std::vector<std::string> labels;
  for (const Database& x : prior.support()) {
    labels.push_back(m.space().Format(x));
  }
  return *Distribution::Create(std::move(labels), std::move(weights));
}

absl::StatusOr<SemanticReport> BuildReport(const Mechanism& m,
                                           const BeliefPrior& prior,
                                           const Database* real_db) {
  const int n = m.space().n();
  // rows[g][k]: row of support database k under Game g.
  std::vector<std::vector<RowPtr>> rows;
  rows.reserve(n + 1);
  ASSIGN_OR_RETURN(auto real_rows, SupportRows(m, prior));
  rows.push_back(std::move(real_rows));
  for (int g = 1; g <= n; ++g) {
    ASSIGN_OR_RETURN(Mechanism game, GameMechanism(m, g));
    ASSIGN_OR_RETURN(auto game_rows, SupportRows(game, prior));
    rows.push_back(std::move(game_rows));
  }
  // Games whose rows coincide with Game 0 on the support give SD 0.
  std::vector<bool> same_as_real(n + 1, false);
  for (int g = 1; g <= n; ++g) {
    same_as_real[g] = rows[g] == rows[0];
  }
  RowPtr real_row;
  if (real_db != nullptr) {
    ASSIGN_OR_RETURN(real_row, m.Row(*real_db));
  }

  const std::vector<double> log_prior = LogPrior(prior);
  SemanticReport report;
  report.weighting = real_db == nullptr
                         ? SemanticReport::Weighting::kPriorMixture
                         : SemanticReport::Weighting::kRealDatabase;
  if (real_db != nullptr) report.real_db = *real_db;
  const size_t num_transcripts = m.transcripts().size();
  report.transcripts.reserve(num_transcripts);
  for (size_t t = 0; t < num_transcripts; ++t) {
    TranscriptSemantics entry;
    entry.transcript = t;
    std::vector<double> mixture(prior.size());
    for (size_t k = 0; k < prior.size(); ++k) {
      mixture[k] = prior.weights()[k] * rows[0][k]->probs[t];
    }
    entry.prob_prior_mixture = CompensatedSum(mixture);
    if (real_row != nullptr) entry.prob_real_db = real_row->probs[t];
    entry.weight =
        real_row != nullptr ? entry.prob_real_db : entry.prob_prior_mixture;
    auto base = Softmax(LogLikelihoods(rows[0], log_prior, t));
    entry.sd_by_game.assign(n, std::numeric_limits<double>::quiet_NaN());
    if (!base.has_value()) {
      report.undefined_mass += entry.weight;
      report.transcripts.push_back(std::move(entry));
      continue;
    }
    entry.defined = true;
    for (int g = 1; g <= n; ++g) {
      double sd = 0.0;
      if (!same_as_real[g]) {
        auto game = Softmax(LogLikelihoods(rows[g], log_prior, t));
        if (!game.has_value()) {
          ++entry.undefined_games;
          ++report.skipped_games;
          continue;
        }
        sd = SupportSd(*base, *game);
      }
      entry.sd_by_game[g - 1] = sd;
      if (sd > entry.loss) {
        entry.loss = sd;
        entry.worst_game = g;
      }
    }
    report.epsilon_star = std::max(report.epsilon_star, entry.loss);
    report.transcripts.push_back(std::move(entry));
  }
  return report;
}

}  // namespace

absl::StatusOr<BeliefPrior> BeliefPrior::Create(const DatabaseSpace& space,
                                                std::vector<Database> support,
                                                std::vector<double> weights) {
  if (support.empty()) return absl::InvalidArgumentError("empty prior support");
  if (support.size() != weights.size()) {
    return absl::InvalidArgumentError(
        "prior support and weights differ in size");
  }
  absl::flat_hash_set<Database> seen;
  for (const Database& x : support) {
    if (absl::Status s = space.Validate(x); !s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("prior support: ", s.message()));
    }
    if (!seen.insert(x).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("prior support repeats database ", space.Format(x)));
    }
  }
  for (double w : weights) {
    if (!(w >= 0.0)) return absl::InvalidArgumentError("negative prior weight");
  }
  const double total = CompensatedSum(weights);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("prior weights sum to ", total, ", not 1"));
  }
  return BeliefPrior(std::move(support), std::move(weights));
}

absl::StatusOr<BeliefPrior> BeliefPrior::Uniform(
    const DatabaseSpace& space, std::vector<Database> support) {
  const size_t k = support.size();
  if (k == 0) return absl::InvalidArgumentError("empty prior support");
  return Create(space, std::move(support), std::vector<double>(k, 1.0 / k));
}

Distribution BeliefPrior::AsDistribution(const DatabaseSpace& space) const {
  std::vector<std::string> labels;
  for (const Database& x : support_) labels.push_back(space.Format(x));
  return *Distribution::Create(std::move(labels), weights_);
}

absl::StatusOr<std::vector<double>> PosteriorWeights(const Mechanism& m,
                                                     const BeliefPrior& prior,
                                                     size_t t) {
  if (t >= m.transcripts().size()) {
    return absl::OutOfRangeError("transcript index out of range");
  }
  ASSIGN_OR_RETURN(auto rows, SupportRows(m, prior));
  auto posterior = Softmax(LogLikelihoods(rows, LogPrior(prior), t));
  if (!posterior.has_value()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "posterior undefined: transcript '", m.transcripts().label(t),
        "' is impossible under the prior"));
  }
  return *std::move(posterior);
}

absl::StatusOr<Distribution> Posterior(const Mechanism& m,
                                       const BeliefPrior& prior,
                                       const std::string& transcript) {
  ASSIGN_OR_RETURN(size_t t, TranscriptIndex(m, transcript));
  ASSIGN_OR_RETURN(auto weights, PosteriorWeights(m, prior, t));
  return SupportDistribution(m, prior, std::move(weights));
}

absl::StatusOr<Distribution> PosteriorGame(const Mechanism& m,
                                           const BeliefPrior& prior, int i,
                                           const std::string& transcript) {
  if (i == 0) return Posterior(m, prior, transcript);
  ASSIGN_OR_RETURN(Mechanism game, GameMechanism(m, i));
  return Posterior(game, prior, transcript);
}

absl::StatusOr<SemanticLoss> ComputeSemanticLoss(
    const Mechanism& m, const BeliefPrior& prior,
    const std::string& transcript) {
  ASSIGN_OR_RETURN(size_t t, TranscriptIndex(m, transcript));
  ASSIGN_OR_RETURN(auto base, PosteriorWeights(m, prior, t));
  SemanticLoss out;
  for (int g = 1; g <= m.space().n(); ++g) {
    ASSIGN_OR_RETURN(Mechanism game, GameMechanism(m, g));
    auto posterior = PosteriorWeights(game, prior, t);
    if (!posterior.ok()) {
      if (!absl::IsFailedPrecondition(posterior.status())) {
        return posterior.status();
      }
      out.undefined_games.push_back(g);
      continue;
    }
    const double sd = SupportSd(base, *posterior);
    if (sd > out.loss) {
      out.loss = sd;
      out.worst_game = g;
    }
  }
  return out;
}

double SemanticReport::MassExceeding(double epsilon) const {
  std::vector<double> mass;
  for (const TranscriptSemantics& entry : transcripts) {
    if (entry.defined && entry.loss > epsilon) mass.push_back(entry.weight);
  }
  return CompensatedSum(mass);
}

absl::StatusOr<SemanticReport> ComputeSemanticReport(const Mechanism& m,
                                                     const BeliefPrior& prior) {
  return BuildReport(m, prior, nullptr);
}

absl::StatusOr<SemanticReport> ComputeRealityObliviousReport(
    const Mechanism& m, const BeliefPrior& prior, const Database& real_db) {
  RETURN_IF_ERROR(m.space().Validate(real_db));
  return BuildReport(m, prior, &real_db);
}

absl::StatusOr<BeliefPrior> InformedPrior(const DatabaseSpace& space,
                                          const Database& real_db, int i,
                                          std::vector<double> symbol_weights) {
  RETURN_IF_ERROR(space.Validate(real_db));
  if (i < 1 || i > space.n()) {
    return absl::OutOfRangeError("informed coordinate out of range");
  }
  if (static_cast<int>(symbol_weights.size()) != space.domain_size()) {
    return absl::InvalidArgumentError("need one weight per domain symbol");
  }
  std::vector<Database> support;
  for (int s = 0; s < space.domain_size(); ++s) {
    Database x = real_db;
    x.Set(i - 1, s);
    support.push_back(std::move(x));
  }
  return BeliefPrior::Create(space, std::move(support),
                             std::move(symbol_weights));
}

}  // namespace semdp
