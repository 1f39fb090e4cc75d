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

#ifndef SEMDP_CLI_H_
#define SEMDP_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace semdp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string command;  // analyze, semantic, counterexample, verify, gen
  std::string mechanism_path;
  std::string prior_path;
  std::string output_path;  // empty: write the report to stdout
  std::string format = "csv";

  // analyze
  std::vector<double> epsilons = {0.0};
  std::optional<double> pointwise_epsilon;
  std::optional<double> pointwise_delta;

  // semantic
  std::optional<std::string> real_db;
  double epsilon = 0.5;
  std::optional<double> dp_epsilon;
  std::optional<double> dp_delta;

  // counterexample
  int n = 500;
  double delta = 0x1p-20;
  std::string log_base = "2";
  double step_fraction = 0.125;
  double sd_threshold = 0.45;

  // verify
  std::string suite = "all";
  int trials = 1000;
  uint64_t seed = 7;

  // gen
  std::string type;
  std::vector<std::string> domain = {"0", "1"};
  std::optional<std::string> default_symbol;
  double flip_prob = 0.25;
  std::optional<double> scale;  // laplace_sum lambda or gaussian_sum sigma
  std::string query = "median";
  double s = 1.0;
  std::optional<double> grid_step;
  double tail_mass = 1e-12;
};

// "e" or a positive number.
absl::StatusOr<double> ParseLogBase(absl::string_view text);

// Runs one command. The report goes to `config.output_path` or, when that is
// empty, to `out`; summaries go to `out` when a file was written and to `err`
// otherwise. Returns the process exit code.
int RunCommand(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace semdp

#endif  // SEMDP_CLI_H_
