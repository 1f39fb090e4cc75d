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

#ifndef SEMDP_SEMANTICS_H_
#define SEMDP_SEMANTICS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "semdp/database.h"
#include "semdp/distribution.h"
#include "semdp/mechanism.h"

namespace semdp {

// Adversary beliefs: a finite-support distribution over databases. Zero
// weights are allowed.
class BeliefPrior {
 public:
  static absl::StatusOr<BeliefPrior> Create(const DatabaseSpace& space,
                                            std::vector<Database> support,
                                            std::vector<double> weights);
  static absl::StatusOr<BeliefPrior> Uniform(const DatabaseSpace& space,
                                             std::vector<Database> support);

  const std::vector<Database>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  size_t size() const { return support_.size(); }
  // Distribution over formatted database labels.
  Distribution AsDistribution(const DatabaseSpace& space) const;

 private:
  BeliefPrior(std::vector<Database> support, std::vector<double> weights)
      : support_(std::move(support)), weights_(std::move(weights)) {}

  std::vector<Database> support_;
  std::vector<double> weights_;
};

// Posterior over the prior support after observing transcript index `t`:
//   b[x|t] = Pr[A(x)=t] b[x] / sum_y Pr[A(y)=t] b[y],
// evaluated in log space. Fails when the transcript has zero marginal.
absl::StatusOr<std::vector<double>> PosteriorWeights(const Mechanism& m,
                                                     const BeliefPrior& prior,
                                                     size_t t);
absl::StatusOr<Distribution> Posterior(const Mechanism& m,
                                       const BeliefPrior& prior,
                                       const std::string& transcript);
// Posterior under Game i, i.e. with the mechanism A(x_{-i}). Game 0 is the
// real interaction.
absl::StatusOr<Distribution> PosteriorGame(const Mechanism& m,
                                           const BeliefPrior& prior, int i,
                                           const std::string& transcript);

struct SemanticLoss {
  double loss = 0.0;  // max_i SD(b_0[.|t], b_i[.|t]) over defined games
  int worst_game = 0;
  std::vector<int> undefined_games;
};

absl::StatusOr<SemanticLoss> ComputeSemanticLoss(const Mechanism& m,
                                                 const BeliefPrior& prior,
                                                 const std::string& transcript);

struct TranscriptSemantics {
  size_t transcript = 0;
  bool defined = false;  // Game 0 posterior exists
  double loss = 0.0;
  int worst_game = 0;
  std::vector<double> sd_by_game;  // index i-1 holds SD versus Game i
  int undefined_games = 0;
  double prob_prior_mixture = 0.0;  // sum_x b[x] Pr[A(x)=t]
  double prob_real_db = 0.0;        // Pr[A(real_db)=t], if any
  double weight = 0.0;              // mass used by MassExceeding
};

class SemanticReport {
 public:
  enum class Weighting { kPriorMixture, kRealDatabase };

  Weighting weighting = Weighting::kPriorMixture;
  std::optional<Database> real_db;
  std::vector<TranscriptSemantics> transcripts;
  double epsilon_star = 0.0;
  // Weight of transcripts whose Game 0 posterior is undefined.
  double undefined_mass = 0.0;
  // Count of (transcript, game) pairs skipped for a zero marginal.
  int skipped_games = 0;
  std::map<std::string, double> bound_margins;

  // Mass of transcripts with loss strictly greater than `epsilon`.
  double MassExceeding(double epsilon) const;
};

// Transcripts weighted by the prior mixture (x drawn from b, t from A(x)).
absl::StatusOr<SemanticReport> ComputeSemanticReport(const Mechanism& m,
                                                     const BeliefPrior& prior);
// Same losses, transcripts weighted by the real database's row. `real_db`
// need not be in the prior support.
absl::StatusOr<SemanticReport> ComputeRealityObliviousReport(
    const Mechanism& m, const BeliefPrior& prior, const Database& real_db);

// Prior free only at coordinate `i` (1-based); every other coordinate equals
// `real_db`. `symbol_weights` is indexed by domain symbol.
absl::StatusOr<BeliefPrior> InformedPrior(const DatabaseSpace& space,
                                          const Database& real_db, int i,
                                          std::vector<double> symbol_weights);

}  // namespace semdp

#endif  // SEMDP_SEMANTICS_H_
