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

#ifndef SEMDP_MECHANISM_H_
#define SEMDP_MECHANISM_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "semdp/database.h"
#include "semdp/distribution.h"
#include "semdp/noise.h"

namespace semdp {

// A real-valued query on databases. Named queries read domain symbols as
// numbers; table queries are explicit value maps.
class Query {
 public:
  enum class Kind { kSum, kMedian, kTable };

  static absl::StatusOr<Query> Sum(const DatabaseSpace& space);
  // Lower median for even n.
  static absl::StatusOr<Query> Median(const DatabaseSpace& space);
  static absl::StatusOr<Query> Table(const DatabaseSpace& space,
                                     std::map<Database, double> values);

  Kind kind() const { return kind_; }
  const std::map<Database, double>& table() const { return table_; }
  absl::StatusOr<double> operator()(const Database& x) const;
  // Bounds on the query over the whole space.
  std::pair<double, double> Range() const { return range_; }

 private:
  Query(Kind kind, std::vector<double> symbol_values,
        std::map<Database, double> table, std::pair<double, double> range)
      : kind_(kind),
        symbol_values_(std::move(symbol_values)),
        table_(std::move(table)),
        range_(range) {}

  Kind kind_;
  std::vector<double> symbol_values_;
  std::map<Database, double> table_;
  std::pair<double, double> range_;
};

// max over neighbors y of |f(x) - f(y)|.
absl::StatusOr<double> LocalSensitivity(const Query& f,
                                        const DatabaseSpace& space,
                                        const Database& x);

struct RandomizedResponseSpec {
  double flip_prob = 0.25;
};
struct NoisySumSpec {
  NoiseSpec noise;
};
struct LocalSensitivityLaplaceSpec {
  Query query;
  double sensitivity_bound = 1.0;  // s
  double epsilon = 1.0;
  NoiseSpec noise;  // Laplace with scale s / epsilon
};
using GeneratorSpec = std::variant<RandomizedResponseSpec, NoisySumSpec,
                                   LocalSensitivityLaplaceSpec>;

struct MechanismRow {
  std::vector<double> probs;
  std::vector<double> log_probs;
};

// A map from databases to distributions over a shared transcript set. Rows are
// either a dense table or computed on demand and memoized; copies share the
// row cache, which is internally synchronized.
class Mechanism {
 public:
  using LogRowFn =
      std::function<absl::StatusOr<std::vector<double>>(const Database&)>;

  // `rows` must contain every database of `space`.
  static absl::StatusOr<Mechanism> Dense(
      DatabaseSpace space, std::shared_ptr<const OutcomeSet> transcripts,
      std::map<Database, std::vector<double>> rows);
  // Rows produced lazily as log-probabilities.
  static absl::StatusOr<Mechanism> FromLogRows(
      DatabaseSpace space, std::shared_ptr<const OutcomeSet> transcripts,
      LogRowFn log_row, std::optional<GeneratorSpec> generator);

  const DatabaseSpace& space() const;
  const OutcomeSet& transcripts() const;
  const std::shared_ptr<const OutcomeSet>& transcript_set() const;
  bool is_dense() const;
  // Set for generator-backed mechanisms.
  const GeneratorSpec* generator() const;
  // Coordinates (1-based, ascending) blanked before every row lookup.
  const std::vector<int>& game_coordinates() const { return game_; }

  absl::StatusOr<std::shared_ptr<const MechanismRow>> Row(
      const Database& x) const;
  absl::StatusOr<Distribution> RowDistribution(const Database& x) const;

 private:
  struct Impl;
  Mechanism(std::shared_ptr<Impl> impl, std::vector<int> game)
      : impl_(std::move(impl)), game_(std::move(game)) {}

  friend absl::StatusOr<Mechanism> GameMechanism(const Mechanism& m, int i);

  std::shared_ptr<Impl> impl_;
  std::vector<int> game_;
};

// A_i with A_i(x) = A(x_{-i}). Applying it twice with the same i is a no-op.
absl::StatusOr<Mechanism> GameMechanism(const Mechanism& m, int i);

// Dense copy of `m`, including any game transform.
absl::StatusOr<Mechanism> Densify(const Mechanism& m,
                                  uint64_t cap = kDefaultEnumerationCap);

// Each coordinate of a binary database is independently flipped with
// probability flip_prob in (0, 1/2); transcripts are databases.
absl::StatusOr<Mechanism> MakeRandomizedResponse(const DatabaseSpace& space,
                                                 double flip_prob);

// Sum of a binary database plus discretized noise over a grid for centers
// [0, n].
absl::StatusOr<Mechanism> MakeNoisySum(const DatabaseSpace& space,
                                       const NoiseSpec& noise);

// f(x) + Lap(s / epsilon) discretized on one grid covering f's range.
// `grid_step` <= 0 selects the default step (s / epsilon) / 8.
absl::StatusOr<Mechanism> MakeLocalSensitivityLaplace(
    const Query& f, const DatabaseSpace& space, double s, double epsilon,
    double grid_step = 0.0, double tail_mass = 1e-12);

// Rebuilds a generator-backed mechanism from its descriptor.
absl::StatusOr<Mechanism> MakeFromGenerator(const DatabaseSpace& space,
                                            const GeneratorSpec& spec);

}  // namespace semdp

#endif  // SEMDP_MECHANISM_H_
