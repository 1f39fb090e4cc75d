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

#ifndef SEMDP_DISTRIBUTION_H_
#define SEMDP_DISTRIBUTION_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace semdp {

// Total mass of a Distribution must lie in [1 - kNormalizationTolerance,
// 1 + kNormalizationTolerance].
inline constexpr double kNormalizationTolerance = 1e-9;

// An ordered set of unique outcome labels. Shared between distributions that
// live on the same outcome space (e.g. all rows of one mechanism) so that
// aligned operations can skip label matching.
class OutcomeSet {
 public:
  static absl::StatusOr<std::shared_ptr<const OutcomeSet>> Create(
      std::vector<std::string> labels);

  size_t size() const { return labels_.size(); }
  const std::string& label(size_t index) const { return labels_[index]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<size_t> IndexOf(absl::string_view label) const;

  bool SameLabelsAs(const OutcomeSet& other) const {
    return this == &other || labels_ == other.labels_;
  }

 private:
  explicit OutcomeSet(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  absl::flat_hash_map<std::string, size_t> index_;
};

// A finite probability vector over labeled outcomes.
class Distribution {
 public:
  static absl::StatusOr<Distribution> Create(std::vector<std::string> labels,
                                             std::vector<double> probs);
  static absl::StatusOr<Distribution> Create(
      std::shared_ptr<const OutcomeSet> outcomes, std::vector<double> probs);

  const OutcomeSet& outcomes() const { return *outcomes_; }
  const std::shared_ptr<const OutcomeSet>& outcome_set() const {
    return outcomes_;
  }
  std::span<const double> probs() const { return probs_; }
  size_t size() const { return probs_.size(); }
  double operator[](size_t index) const { return probs_[index]; }

  // Probability of `label`; zero for labels outside the outcome set.
  double ProbOf(absl::string_view label) const;

 private:
  Distribution(std::shared_ptr<const OutcomeSet> outcomes,
               std::vector<double> probs)
      : outcomes_(std::move(outcomes)), probs_(std::move(probs)) {}

  std::shared_ptr<const OutcomeSet> outcomes_;
  std::vector<double> probs_;
};

// Two probability vectors expressed over a common outcome set. Labels present
// in only one input are zero-extended in the other.
struct AlignedPair {
  std::shared_ptr<const OutcomeSet> outcomes;
  std::vector<double> p;
  std::vector<double> q;
};

AlignedPair Align(const Distribution& p, const Distribution& q);

// Joint distribution of (input, output) pairs, stored row-major by input.
class JointTable {
 public:
  static absl::StatusOr<JointTable> Create(
      std::shared_ptr<const OutcomeSet> inputs,
      std::shared_ptr<const OutcomeSet> outputs, std::vector<double> probs);

  size_t num_inputs() const { return inputs_->size(); }
  size_t num_outputs() const { return outputs_->size(); }
  const OutcomeSet& inputs() const { return *inputs_; }
  const OutcomeSet& outputs() const { return *outputs_; }
  double at(size_t input, size_t output) const {
    return probs_[input * num_outputs() + output];
  }
  std::span<const double> probs() const { return probs_; }

  // Flattened distribution over "input|output" labels.
  Distribution Flatten() const;
  std::vector<double> OutputMarginal() const;
  // Conditional law of the input given output column `output`.
  absl::StatusOr<Distribution> InputGivenOutput(size_t output) const;

 private:
  JointTable(std::shared_ptr<const OutcomeSet> inputs,
             std::shared_ptr<const OutcomeSet> outputs,
             std::vector<double> probs)
      : inputs_(std::move(inputs)),
        outputs_(std::move(outputs)),
        probs_(std::move(probs)) {}

  std::shared_ptr<const OutcomeSet> inputs_;
  std::shared_ptr<const OutcomeSet> outputs_;
  std::vector<double> probs_;
};

// Neumaier-compensated sum.
double CompensatedSum(std::span<const double> values);

}  // namespace semdp

#endif  // SEMDP_DISTRIBUTION_H_
