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

#include "semdp/noise.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace semdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr size_t kMaxGridCells = 4'000'000;

// log(1 - e^x) for x <= 0.
double Log1mExp(double x) {
  if (x == -kInf) return 0.0;
  return x > -std::numbers::ln2 ? std::log(-std::expm1(x))
                                : std::log1p(-std::exp(x));
}

// Log of the standard upper tail beyond z (z >= 0 in practice).
double LogUpperTail(NoiseKind kind, double z) {
  if (z == kInf) return -kInf;
  if (kind == NoiseKind::kLaplace) {
    return z >= 0 ? -std::numbers::ln2 - z : std::log1p(-0.5 * std::exp(z));
  }
  return -std::numbers::ln2 + LogErfc(z / std::numbers::sqrt2);
}

// Log mass of the standardized interval [a, b], a < b, a and b possibly
// infinite.
double LogIntervalMass(NoiseKind kind, double a, double b) {
  if (a >= 0.0) {
    const double upper_a = LogUpperTail(kind, a);
    const double upper_b = LogUpperTail(kind, b);
    return upper_a + Log1mExp(upper_b - upper_a);
  }
  if (b <= 0.0) return LogIntervalMass(kind, -b, -a);
  // Straddling zero: both tails are at most 1/2 each.
  const double lower = std::exp(LogUpperTail(kind, -a));
  const double upper = std::exp(LogUpperTail(kind, b));
  return std::log1p(-(lower + upper));
}

}  // namespace

absl::string_view NoiseKindName(NoiseKind kind) {
  return kind == NoiseKind::kLaplace ? "laplace" : "gaussian";
}

absl::StatusOr<NoiseSpec> NoiseSpec::Create(NoiseKind kind, double scale,
                                            double grid_step,
                                            double tail_mass) {
  if (!(scale > 0.0) || std::isinf(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise scale must be positive and finite, got ", scale));
  }
  if (!(grid_step > 0.0) || std::isinf(grid_step)) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid step must be positive, got ", grid_step));
  }
  if (!(tail_mass > 0.0 && tail_mass < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("tail mass must lie in (0,1), got ", tail_mass));
  }
  return NoiseSpec{kind, scale, grid_step, tail_mass};
}

absl::StatusOr<NoiseSpec> NoiseSpec::Default(NoiseKind kind, double scale) {
  return Create(kind, scale, scale / 8.0, 1e-12);
}

double LogErfc(double x) {
  if (x < 0.0) return std::log(std::erfc(x));
  if (x < 20.0) return std::log(std::erfc(x));
  // Laplace continued fraction:
  // erfc(x) = e^{-x^2} / sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
  double tail = x;
  for (int k = 60; k >= 1; --k) tail = x + 0.5 * k / tail;
  return -x * x - 0.5 * std::log(std::numbers::pi) - std::log(tail);
}

double TailHalfWidth(const NoiseSpec& spec) {
  const double target = std::log(spec.tail_mass / 2.0);
  if (spec.kind == NoiseKind::kLaplace) {
    return spec.scale * (-std::numbers::ln2 - target);
  }
  double lo = 0.0;
  double hi = 1.0;
  while (LogUpperTail(NoiseKind::kGaussian, hi) > target) hi *= 2.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (LogUpperTail(NoiseKind::kGaussian, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi * spec.scale;
}

absl::StatusOr<NoiseGrid> MakeNoiseGrid(const NoiseSpec& spec,
                                        double min_center, double max_center) {
  if (!(min_center <= max_center) || std::isinf(min_center) ||
      std::isinf(max_center)) {
    return absl::InvalidArgumentError("noise centers must be a finite range");
  }
  const double half_width = TailHalfWidth(spec);
  const double left = std::ceil(half_width / spec.grid_step);
  const double right =
      std::ceil((max_center - min_center + half_width) / spec.grid_step);
  const double cells = left + right;
  if (cells > static_cast<double>(kMaxGridCells)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "noise grid would need ", cells, " cells; increase the grid step"));
  }
  NoiseGrid grid;
  const auto count = static_cast<size_t>(cells);
  const auto left_cells = static_cast<long>(left);
  grid.edges.reserve(count + 1);
  for (size_t j = 0; j <= count; ++j) {
    grid.edges.push_back(
        min_center + static_cast<double>(static_cast<long>(j) - left_cells) *
                         spec.grid_step);
  }
  for (int digits : {10, 17}) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (size_t j = 0; j < count; ++j) {
      labels.push_back(absl::StrFormat("%.*g", digits, grid.Midpoint(j)));
    }
    auto set = OutcomeSet::Create(std::move(labels));
    if (set.ok()) {
      grid.cells = *std::move(set);
      return grid;
    }
  }
  return absl::InvalidArgumentError("grid step too small to label cells");
}

std::vector<double> CellLogProbs(const NoiseSpec& spec, const NoiseGrid& grid,
                                 double center) {
  const size_t count = grid.size();
  std::vector<double> out(count);
  for (size_t j = 0; j < count; ++j) {
    const double a = j == 0 ? -kInf : (grid.edges[j] - center) / spec.scale;
    const double b =
        j + 1 == count ? kInf : (grid.edges[j + 1] - center) / spec.scale;
    out[j] = LogIntervalMass(spec.kind, a, b);
  }
  return out;
}

absl::StatusOr<double> GaussianSigma(double epsilon, double delta,
                                     double log_base) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError("epsilon must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError("delta must lie in (0,1)");
  }
  if (!(log_base > 1.0)) {
    return absl::InvalidArgumentError("log base must exceed 1");
  }
  return std::sqrt(std::log(1.0 / delta) / std::log(log_base)) / epsilon;
}

}  // namespace semdp
