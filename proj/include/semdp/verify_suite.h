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

#ifndef SEMDP_VERIFY_SUITE_H_
#define SEMDP_VERIFY_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "semdp/database.h"
#include "semdp/indistinguishability.h"
#include "semdp/mechanism.h"

namespace semdp {

// Margins below this are treated as violations.
inline constexpr double kMarginTolerance = 1e-10;

struct LawResult {
  std::string name;
  bool pass = false;
  // Informational lines never affect the suite outcome.
  bool informational = false;
  int trials = 0;
  // Smallest (bound - observed) over all trials.
  double worst_margin = 0.0;
  std::string detail;
};

struct SuiteOptions {
  int trials = 1000;
  uint64_t seed = 7;
};

// Claim-suite laws on random distribution pairs and indexed families.
std::vector<LawResult> RunClaimLaws(const SuiteOptions& options);
// Theorem-suite laws on concrete and random mechanisms.
absl::StatusOr<std::vector<LawResult>> RunTheoremLaws(
    const SuiteOptions& options);
// `suite` is one of "claims", "theorems", "all".
absl::StatusOr<std::vector<LawResult>> RunVerifySuite(
    absl::string_view suite, const SuiteOptions& options);

// Randomized response on {0,1}^n that, with probability `leak_prob`,
// publishes the database itself as the transcript "leak:<database>".
absl::StatusOr<Mechanism> MakeLeakyRandomizedResponse(int n, double flip_prob,
                                                      double leak_prob);

// Median over {0..4}^5 released with Laplace(s / eps) noise, s = 1, checked
// at (eps, delta) = (0.1, 1e-4).
struct MedianSetup {
  DatabaseSpace space;
  Mechanism mechanism;
  IndistParams params;
  std::vector<Database> low_sensitivity;  // LS_median(x) <= 1
};
absl::StatusOr<MedianSetup> MakeMedianSetup();

std::string FormatLawLine(const LawResult& law);
bool AllPass(const std::vector<LawResult>& laws);

}  // namespace semdp

#endif  // SEMDP_VERIFY_SUITE_H_
