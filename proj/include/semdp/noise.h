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

#ifndef SEMDP_NOISE_H_
#define SEMDP_NOISE_H_

#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "semdp/distribution.h"

namespace semdp {

enum class NoiseKind { kLaplace, kGaussian };

absl::string_view NoiseKindName(NoiseKind kind);

// Additive noise discretized onto an equal-width grid. `scale` is the Laplace
// parameter lambda (density proportional to exp(-|y|/lambda)) or the Gaussian
// standard deviation sigma.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::kLaplace;
  double scale = 1.0;
  double grid_step = 0.125;
  // Total mass allowed beyond the half-width W on both sides together.
  double tail_mass = 1e-12;

  static absl::StatusOr<NoiseSpec> Create(NoiseKind kind, double scale,
                                          double grid_step, double tail_mass);
  // grid_step = scale / 8, tail_mass = 1e-12.
  static absl::StatusOr<NoiseSpec> Default(NoiseKind kind, double scale);
};

// Half-width W such that each one-sided tail beyond W has mass at most
// tail_mass / 2.
double TailHalfWidth(const NoiseSpec& spec);

// Cells [edges[j], edges[j+1]), with the first and last cells extended to
// -inf and +inf so they absorb the tails.
struct NoiseGrid {
  std::vector<double> edges;
  std::shared_ptr<const OutcomeSet> cells;  // labeled by cell midpoint

  size_t size() const { return edges.size() - 1; }
  double Midpoint(size_t cell) const {
    return 0.5 * (edges[cell] + edges[cell + 1]);
  }
};

// Grid covering [min_center - W, max_center + W]. Edges are aligned so that
// min_center + k * grid_step is an edge for every integer k in range.
absl::StatusOr<NoiseGrid> MakeNoiseGrid(const NoiseSpec& spec,
                                        double min_center, double max_center);

// Log of the probability of each grid cell when the noise is centered at
// `center`. Entries are finite wherever the exact mass is positive, even when
// the mass itself underflows a double.
std::vector<double> CellLogProbs(const NoiseSpec& spec, const NoiseGrid& grid,
                                 double center);

// log(erfc(x)) without underflow for large x.
double LogErfc(double x);

// Gaussian calibration sigma = sqrt(log_b(1/delta)) / epsilon.
absl::StatusOr<double> GaussianSigma(double epsilon, double delta,
                                     double log_base);

}  // namespace semdp

#endif  // SEMDP_NOISE_H_
