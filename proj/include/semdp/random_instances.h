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

#ifndef SEMDP_RANDOM_INSTANCES_H_
#define SEMDP_RANDOM_INSTANCES_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "semdp/database.h"
#include "semdp/distribution.h"
#include "semdp/indistinguishability.h"
#include "semdp/mechanism.h"
#include "semdp/semantics.h"

namespace semdp {

// Seeded generator of random test instances. Every draw is a deterministic
// function of the seed and the call sequence.
class RandomInstances {
 public:
  explicit RandomInstances(uint64_t seed) : rng_(seed) {}

  double Uniform(double lo, double hi);
  int UniformInt(int lo, int hi);  // inclusive
  uint64_t NextSeed() { return rng_(); }

  // Symmetric Dirichlet(alpha) draw of length k.
  std::vector<double> Dirichlet(size_t k, double alpha = 1.0);
  // Multiplicative perturbation p_a * exp(strength * Z_a), renormalized.
  std::vector<double> Perturb(const std::vector<double>& p, double strength);
  // Dirichlet draw with a random subset of entries forced to zero (at least
  // one entry stays positive).
  std::vector<double> Sparse(size_t k, double zero_prob);

  // Labels "o0", "o1", ...
  static std::shared_ptr<const OutcomeSet> Labels(size_t k,
                                                  const std::string& prefix);

  // A pair drawn from a mix of independent, nearby and sparse generators.
  std::pair<Distribution, Distribution> Pair(size_t k);
  Channel RandomChannel(const OutcomeSet& sources, size_t targets);
  std::pair<JointTable, JointTable> JointPair(size_t inputs, size_t outputs);

  absl::StatusOr<BeliefPrior> Prior(const DatabaseSpace& space,
                                    size_t max_support);
  // Dense mechanism with rows drawn like Pair().
  absl::StatusOr<Mechanism> DenseMechanism(const DatabaseSpace& space,
                                           size_t transcripts);
  Database RandomDatabase(const DatabaseSpace& space);

 private:
  std::mt19937_64 rng_;
};

}  // namespace semdp

#endif  // SEMDP_RANDOM_INSTANCES_H_
