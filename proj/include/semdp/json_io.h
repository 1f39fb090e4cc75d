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

#ifndef SEMDP_JSON_IO_H_
#define SEMDP_JSON_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "semdp/database.h"
#include "semdp/mechanism.h"
#include "semdp/semantics.h"

namespace semdp {

// Shortest-round-trip decimal for probabilities: 17 significant digits.
std::string FormatProbability(double p);

// Mechanism file: {"domain", "n", "default", "transcripts", and either
// "matrix" (database string -> probability list) or "generator"}.
// Diagnostics name the offending line (syntax errors) or field.
absl::StatusOr<Mechanism> ParseMechanismJson(absl::string_view text);
// Dense mechanisms are written as a matrix, generator-backed ones as their
// descriptor. Game-transformed lazy mechanisms cannot be written.
absl::StatusOr<std::string> MechanismToJson(const Mechanism& m);

// Prior file: [{"database": "0,1", "weight": "0.5"}, ...].
absl::StatusOr<BeliefPrior> ParsePriorJson(absl::string_view text,
                                           const DatabaseSpace& space);
std::string PriorToJson(const BeliefPrior& prior, const DatabaseSpace& space);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, absl::string_view contents);

}  // namespace semdp

#endif  // SEMDP_JSON_IO_H_
