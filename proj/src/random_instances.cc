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

#include "semdp/random_instances.h"

#include <algorithm>
#include <cmath>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

std::vector<double> Normalize(std::vector<double> v) {
  const double total = CompensatedSum(v);
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

double RandomInstances::Uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

int RandomInstances::UniformInt(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

std::vector<double> RandomInstances::Dirichlet(size_t k, double alpha) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> v(k);
  double total = 0.0;
  do {
    for (double& x : v) x = gamma(rng_);
    total = CompensatedSum(v);
  } while (!(total > 0.0));
  return Normalize(std::move(v));
}

std::vector<double> RandomInstances::Perturb(const std::vector<double>& p,
                                             double strength) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(p.size());
  for (size_t a = 0; a < p.size(); ++a) {
    v[a] = p[a] * std::exp(strength * normal(rng_));
  }
  return Normalize(std::move(v));
}

std::vector<double> RandomInstances::Sparse(size_t k, double zero_prob) {
  std::vector<double> v = Dirichlet(k);
  std::bernoulli_distribution drop(zero_prob);
  const size_t keep = std::uniform_int_distribution<size_t>(0, k - 1)(rng_);
  for (size_t a = 0; a < k; ++a) {
    if (a != keep && drop(rng_)) v[a] = 0.0;
  }
  return Normalize(std::move(v));
}

std::shared_ptr<const OutcomeSet> RandomInstances::Labels(
    size_t k, const std::string& prefix) {
  std::vector<std::string> labels;
  for (size_t a = 0; a < k; ++a) labels.push_back(absl::StrCat(prefix, a));
  return *OutcomeSet::Create(std::move(labels));
}

std::pair<Distribution, Distribution> RandomInstances::Pair(size_t k) {
  std::vector<double> p;
  std::vector<double> q;
  switch (UniformInt(0, 3)) {
    case 0:
      p = Dirichlet(k);
      q = Dirichlet(k);
      break;
    case 1:
      p = Dirichlet(k);
      q = Perturb(p, Uniform(0.0, 2.0));
      break;
    case 2:
      p = Sparse(k, 0.3);
      q = Sparse(k, 0.3);
      break;
    default:
      p = Dirichlet(k, 0.3);
      q = Perturb(p, Uniform(0.0, 0.5));
      break;
  }
  auto labels = Labels(k, "o");
  return {*Distribution::Create(labels, std::move(p)),
          *Distribution::Create(labels, std::move(q))};
}

Channel RandomInstances::RandomChannel(const OutcomeSet& sources,
                                       size_t targets) {
  auto labels = Labels(targets, "g");
  std::map<std::string, Distribution> rows;
  for (const std::string& s : sources.labels()) {
    rows.emplace(s, *Distribution::Create(labels, Dirichlet(targets, 0.5)));
  }
  return *Channel::Create(std::move(rows));
}

std::pair<JointTable, JointTable> RandomInstances::JointPair(size_t inputs,
                                                             size_t outputs) {
  const size_t cells = inputs * outputs;
  std::vector<double> p = Dirichlet(cells);
  std::vector<double> q;
  switch (UniformInt(0, 2)) {
    case 0:
      q = Perturb(p, Uniform(0.01, 0.5));
      break;
    case 1: {
      // Replace one input's row with a fresh draw.
      q = p;
      const size_t row = UniformInt(0, static_cast<int>(inputs) - 1);
      double mass = 0.0;
      for (size_t t = 0; t < outputs; ++t) mass += q[row * outputs + t];
      std::vector<double> fresh = Dirichlet(outputs);
      for (size_t t = 0; t < outputs; ++t) {
        q[row * outputs + t] = mass * fresh[t];
      }
      q = Normalize(std::move(q));
      break;
    }
    default:
      q = Dirichlet(cells);
      break;
  }
  auto in = Labels(inputs, "x");
  auto out = Labels(outputs, "t");
  return {*JointTable::Create(in, out, std::move(p)),
          *JointTable::Create(in, out, std::move(q))};
}

Database RandomInstances::RandomDatabase(const DatabaseSpace& space) {
  std::vector<int> entries(space.n());
  for (int& e : entries) e = UniformInt(0, space.domain_size() - 1);
  return Database(std::move(entries));
}

absl::StatusOr<BeliefPrior> RandomInstances::Prior(const DatabaseSpace& space,
                                                   size_t max_support) {
  std::vector<Database> support;
  if (space.IsEnumerable() && *space.Count() <= max_support) {
    ASSIGN_OR_RETURN(support, space.Enumerate());
    // Random subset of size at least one.
    std::shuffle(support.begin(), support.end(), rng_);
    support.resize(UniformInt(1, static_cast<int>(support.size())));
  } else {
    const int k = UniformInt(1, static_cast<int>(max_support));
    absl::flat_hash_set<Database> seen;
    for (int tries = 0; tries < 64 * k && static_cast<int>(support.size()) < k;
         ++tries) {
      Database x = RandomDatabase(space);
      if (seen.insert(x).second) support.push_back(std::move(x));
    }
  }
  std::sort(support.begin(), support.end());
  std::vector<double> weights = Dirichlet(support.size(), 0.7);
  return BeliefPrior::Create(space, std::move(support), std::move(weights));
}

absl::StatusOr<Mechanism> RandomInstances::DenseMechanism(
    const DatabaseSpace& space, size_t transcripts) {
  ASSIGN_OR_RETURN(std::vector<Database> all, space.Enumerate());
  std::map<Database, std::vector<double>> rows;
  const std::vector<double> base = Dirichlet(transcripts);
  for (Database& x : all) {
    rows.emplace(std::move(x), Perturb(base, Uniform(0.0, 0.6)));
  }
  return Mechanism::Dense(space, Labels(transcripts, "t"), std::move(rows));
}

}  // namespace semdp
