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

#include "semdp/distribution.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace semdp {

OutcomeSet::OutcomeSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

absl::StatusOr<std::shared_ptr<const OutcomeSet>> OutcomeSet::Create(
    std::vector<std::string> labels) {
  absl::flat_hash_map<absl::string_view, size_t> seen;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!seen.emplace(labels[i], i).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate outcome label '", labels[i], "'"));
    }
  }
  return std::shared_ptr<const OutcomeSet>(new OutcomeSet(std::move(labels)));
}

std::optional<size_t> OutcomeSet::IndexOf(absl::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<Distribution> Distribution::Create(
    std::vector<std::string> labels, std::vector<double> probs) {
  auto outcomes = OutcomeSet::Create(std::move(labels));
  if (!outcomes.ok()) return outcomes.status();
  return Create(*std::move(outcomes), std::move(probs));
}

absl::StatusOr<Distribution> Distribution::Create(
    std::shared_ptr<const OutcomeSet> outcomes, std::vector<double> probs) {
  if (outcomes == nullptr) {
    return absl::InvalidArgumentError("null outcome set");
  }
  if (outcomes->size() != probs.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("outcome count ", outcomes->size(),
                     " does not match probability count ", probs.size()));
  }
  for (size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0) || probs[i] > 1.0 + kNormalizationTolerance) {
      return absl::InvalidArgumentError(
          absl::StrCat("probability of '", outcomes->label(i), "' is ",
                       probs[i], ", outside [0,1]"));
    }
  }
  const double total = CompensatedSum(probs);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("probabilities sum to ", total, ", not 1"));
  }
  return Distribution(std::move(outcomes), std::move(probs));
}

double Distribution::ProbOf(absl::string_view label) const {
  auto index = outcomes_->IndexOf(label);
  return index.has_value() ? probs_[*index] : 0.0;
}

AlignedPair Align(const Distribution& p, const Distribution& q) {
  if (p.outcomes().SameLabelsAs(q.outcomes())) {
    return AlignedPair{p.outcome_set(),
                       std::vector<double>(p.probs().begin(), p.probs().end()),
                       std::vector<double>(q.probs().begin(), q.probs().end())};
  }
  std::vector<std::string> labels = p.outcomes().labels();
  for (const std::string& label : q.outcomes().labels()) {
    if (!p.outcomes().IndexOf(label).has_value()) labels.push_back(label);
  }
  AlignedPair out;
  out.p.assign(labels.size(), 0.0);
  out.q.assign(labels.size(), 0.0);
  for (size_t i = 0; i < labels.size(); ++i) {
    out.p[i] = p.ProbOf(labels[i]);
    out.q[i] = q.ProbOf(labels[i]);
  }
  // Labels are unique by construction of the inputs.
  out.outcomes = *OutcomeSet::Create(std::move(labels));
  return out;
}

double CompensatedSum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

absl::StatusOr<JointTable> JointTable::Create(
    std::shared_ptr<const OutcomeSet> inputs,
    std::shared_ptr<const OutcomeSet> outputs, std::vector<double> probs) {
  if (inputs == nullptr || outputs == nullptr) {
    return absl::InvalidArgumentError("null outcome set");
  }
  if (probs.size() != inputs->size() * outputs->size()) {
    return absl::InvalidArgumentError("joint table has wrong number of cells");
  }
  for (double v : probs) {
    if (!(v >= 0.0)) {
      return absl::InvalidArgumentError("negative joint probability");
    }
  }
  const double total = CompensatedSum(probs);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("joint probabilities sum to ", total, ", not 1"));
  }
  return JointTable(std::move(inputs), std::move(outputs), std::move(probs));
}

Distribution JointTable::Flatten() const {
  std::vector<std::string> labels;
  labels.reserve(probs_.size());
  for (const std::string& in : inputs_->labels()) {
    for (const std::string& out : outputs_->labels()) {
      labels.push_back(absl::StrCat(in, "|", out));
    }
  }
  auto set = OutcomeSet::Create(std::move(labels));
  // Input and output labels are each unique, but "a|b" concatenations could
  // collide when labels themselves contain '|'; fall back to index labels.
  if (!set.ok()) {
    std::vector<std::string> index_labels;
    for (size_t i = 0; i < num_inputs(); ++i) {
      for (size_t j = 0; j < num_outputs(); ++j) {
        index_labels.push_back(absl::StrCat("#", i, "|#", j));
      }
    }
    set = OutcomeSet::Create(std::move(index_labels));
  }
  return *Distribution::Create(*std::move(set), probs_);
}

std::vector<double> JointTable::OutputMarginal() const {
  std::vector<double> marginal(num_outputs(), 0.0);
  for (size_t i = 0; i < num_inputs(); ++i) {
    for (size_t j = 0; j < num_outputs(); ++j) marginal[j] += at(i, j);
  }
  return marginal;
}

absl::StatusOr<Distribution> JointTable::InputGivenOutput(size_t output) const {
  if (output >= num_outputs()) {
    return absl::OutOfRangeError("output index out of range");
  }
  std::vector<double> column(num_inputs());
  for (size_t i = 0; i < num_inputs(); ++i) column[i] = at(i, output);
  const double mass = CompensatedSum(column);
  if (!(mass > 0.0)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "output '", outputs_->label(output), "' has zero probability"));
  }
  for (double& v : column) v /= mass;
  return Distribution::Create(inputs_, std::move(column));
}

}  // namespace semdp
