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

#include "semdp/mechanism.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/base/thread_annotations.h"
#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/synchronization/mutex.h"
#include "semdp/status_macros.h"

namespace semdp {
namespace {

constexpr uint64_t kMaxRandomizedResponseTranscripts = uint64_t{1} << 16;

absl::StatusOr<std::vector<double>> NumericSymbols(const DatabaseSpace& space) {
  std::vector<double> values;
  for (const std::string& symbol : space.domain()) {
    double v;
    if (!absl::SimpleAtod(symbol, &v) || !std::isfinite(v)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "query needs numeric domain symbols, got '", symbol, "'"));
    }
    values.push_back(v);
  }
  return values;
}

absl::Status CheckBinaryNumeric(const DatabaseSpace& space) {
  ASSIGN_OR_RETURN(std::vector<double> values, NumericSymbols(space));
  std::sort(values.begin(), values.end());
  if (values != std::vector<double>{0.0, 1.0}) {
    return absl::InvalidArgumentError("noisy sum needs the domain {0, 1}");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Query> Query::Sum(const DatabaseSpace& space) {
  ASSIGN_OR_RETURN(std::vector<double> values, NumericSymbols(space));
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return Query(Kind::kSum, values, {}, {space.n() * *lo, space.n() * *hi});
}

absl::StatusOr<Query> Query::Median(const DatabaseSpace& space) {
  ASSIGN_OR_RETURN(std::vector<double> values, NumericSymbols(space));
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return Query(Kind::kMedian, values, {}, {*lo, *hi});
}

absl::StatusOr<Query> Query::Table(const DatabaseSpace& space,
                                   std::map<Database, double> values) {
  if (values.empty()) return absl::InvalidArgumentError("empty query table");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& [x, v] : values) {
    RETURN_IF_ERROR(space.Validate(x));
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError("query values must be finite");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return Query(Kind::kTable, {}, std::move(values), {lo, hi});
}

absl::StatusOr<double> Query::operator()(const Database& x) const {
  switch (kind_) {
    case Kind::kSum: {
      double total = 0.0;
      for (int s : x.entries()) total += symbol_values_[s];
      return total;
    }
    case Kind::kMedian: {
      std::vector<double> v;
      v.reserve(x.size());
      for (int s : x.entries()) v.push_back(symbol_values_[s]);
      auto mid = v.begin() + (v.size() - 1) / 2;
      std::nth_element(v.begin(), mid, v.end());
      return *mid;
    }
    case Kind::kTable: {
      auto it = table_.find(x);
      if (it == table_.end()) {
        return absl::NotFoundError("database missing from query table");
      }
      return it->second;
    }
  }
  return absl::InternalError("unknown query kind");
}

absl::StatusOr<double> LocalSensitivity(const Query& f,
                                        const DatabaseSpace& space,
                                        const Database& x) {
  if (f.kind() == Query::Kind::kTable && !space.IsEnumerable()) {
    return absl::FailedPreconditionError(
        "local sensitivity of a table query needs an enumerable space");
  }
  ASSIGN_OR_RETURN(std::vector<Database> neighbors, Neighbors(space, x));
  ASSIGN_OR_RETURN(double fx, f(x));
  double worst = 0.0;
  for (const Database& y : neighbors) {
    ASSIGN_OR_RETURN(double fy, f(y));
    worst = std::max(worst, std::abs(fx - fy));
  }
  return worst;
}

struct Mechanism::Impl {
  Impl(DatabaseSpace space, std::shared_ptr<const OutcomeSet> transcripts,
       bool dense, std::optional<GeneratorSpec> generator, LogRowFn log_row)
      : space(std::move(space)),
        transcripts(std::move(transcripts)),
        dense(dense),
        generator(std::move(generator)),
        log_row(std::move(log_row)) {}

  const DatabaseSpace space;
  const std::shared_ptr<const OutcomeSet> transcripts;
  const bool dense;
  const std::optional<GeneratorSpec> generator;
  const LogRowFn log_row;

  absl::Mutex mu;
  absl::flat_hash_map<Database, std::shared_ptr<const MechanismRow>> rows
      ABSL_GUARDED_BY(mu);
};

absl::StatusOr<Mechanism> Mechanism::Dense(
    DatabaseSpace space, std::shared_ptr<const OutcomeSet> transcripts,
    std::map<Database, std::vector<double>> rows) {
  if (transcripts == nullptr) {
    return absl::InvalidArgumentError("null transcript set");
  }
  auto count = space.Count();
  if (!space.IsEnumerable() || rows.size() != *count) {
    return absl::InvalidArgumentError(absl::StrCat(
        "dense mechanism needs one row per database; got ", rows.size()));
  }
  auto impl = std::make_shared<Impl>(std::move(space), transcripts, true,
                                     std::nullopt, LogRowFn());
  absl::MutexLock lock(&impl->mu);
  for (auto& [x, probs] : rows) {
    RETURN_IF_ERROR(impl->space.Validate(x));
    auto checked = Distribution::Create(transcripts, probs);
    if (!checked.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row ", impl->space.Format(x), ": ", checked.status().message()));
    }
    auto row = std::make_shared<MechanismRow>();
    row->log_probs.reserve(probs.size());
    for (double p : probs) row->log_probs.push_back(std::log(p));
    row->probs = std::move(probs);
    impl->rows.emplace(x, std::move(row));
  }
  return Mechanism(std::move(impl), {});
}

absl::StatusOr<Mechanism> Mechanism::FromLogRows(
    DatabaseSpace space, std::shared_ptr<const OutcomeSet> transcripts,
    LogRowFn log_row, std::optional<GeneratorSpec> generator) {
  if (transcripts == nullptr || !log_row) {
    return absl::InvalidArgumentError("generator needs transcripts and rows");
  }
  auto impl =
      std::make_shared<Impl>(std::move(space), std::move(transcripts), false,
                             std::move(generator), std::move(log_row));
  return Mechanism(std::move(impl), {});
}

const DatabaseSpace& Mechanism::space() const { return impl_->space; }
const OutcomeSet& Mechanism::transcripts() const { return *impl_->transcripts; }
const std::shared_ptr<const OutcomeSet>& Mechanism::transcript_set() const {
  return impl_->transcripts;
}
bool Mechanism::is_dense() const { return impl_->dense; }
const GeneratorSpec* Mechanism::generator() const {
  return impl_->generator.has_value() && game_.empty() ? &*impl_->generator
                                                       : nullptr;
}

absl::StatusOr<std::shared_ptr<const MechanismRow>> Mechanism::Row(
    const Database& x) const {
  RETURN_IF_ERROR(impl_->space.Validate(x));
  Database key = x;
  for (int i : game_) key.Set(i - 1, impl_->space.default_index());
  {
    absl::MutexLock lock(&impl_->mu);
    auto it = impl_->rows.find(key);
    if (it != impl_->rows.end()) return it->second;
  }
  if (impl_->dense) {
    return absl::InternalError("dense mechanism is missing a row");
  }
  ASSIGN_OR_RETURN(std::vector<double> log_probs, impl_->log_row(key));
  if (log_probs.size() != impl_->transcripts->size()) {
    return absl::InternalError("generated row has the wrong length");
  }
  auto row = std::make_shared<MechanismRow>();
  row->probs.reserve(log_probs.size());
  for (double lp : log_probs) row->probs.push_back(std::exp(lp));
  const double total = CompensatedSum(row->probs);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    return absl::InternalError(absl::StrCat(
        "generated row for ", impl_->space.Format(key), " sums to ", total));
  }
  row->log_probs = std::move(log_probs);
  absl::MutexLock lock(&impl_->mu);
  return impl_->rows.try_emplace(key, std::move(row)).first->second;
}

absl::StatusOr<Distribution> Mechanism::RowDistribution(
    const Database& x) const {
  ASSIGN_OR_RETURN(auto row, Row(x));
  return Distribution::Create(impl_->transcripts, row->probs);
}

absl::StatusOr<Mechanism> GameMechanism(const Mechanism& m, int i) {
  if (i < 1 || i > m.space().n()) {
    return absl::OutOfRangeError(
        absl::StrCat("coordinate ", i, " outside [1, ", m.space().n(), "]"));
  }
  std::vector<int> game = m.game_;
  if (!std::binary_search(game.begin(), game.end(), i)) {
    game.insert(std::upper_bound(game.begin(), game.end(), i), i);
  }
  return Mechanism(m.impl_, std::move(game));
}

absl::StatusOr<Mechanism> Densify(const Mechanism& m, uint64_t cap) {
  ASSIGN_OR_RETURN(std::vector<Database> all, m.space().Enumerate(cap));
  std::map<Database, std::vector<double>> rows;
  for (Database& x : all) {
    ASSIGN_OR_RETURN(auto row, m.Row(x));
    rows.emplace(std::move(x), row->probs);
  }
  return Mechanism::Dense(m.space(), m.transcript_set(), std::move(rows));
}

absl::StatusOr<Mechanism> MakeRandomizedResponse(const DatabaseSpace& space,
                                                 double flip_prob) {
  if (space.domain_size() != 2) {
    return absl::InvalidArgumentError(
        "randomized response needs a two-symbol domain");
  }
  if (!(flip_prob > 0.0 && flip_prob < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("flip probability must lie in (0, 1/2), got ", flip_prob));
  }
  ASSIGN_OR_RETURN(std::vector<Database> all,
                   space.Enumerate(kMaxRandomizedResponseTranscripts));
  std::vector<std::string> labels;
  labels.reserve(all.size());
  for (const Database& t : all) labels.push_back(space.Format(t));
  ASSIGN_OR_RETURN(auto transcripts, OutcomeSet::Create(std::move(labels)));
  auto outputs = std::make_shared<const std::vector<Database>>(std::move(all));
  const double log_keep = std::log1p(-flip_prob);
  const double log_flip = std::log(flip_prob);
  Mechanism::LogRowFn log_row =
      [outputs, log_keep,
       log_flip](const Database& x) -> absl::StatusOr<std::vector<double>> {
    std::vector<double> out;
    out.reserve(outputs->size());
    for (const Database& t : *outputs) {
      double lp = 0.0;
      for (size_t j = 0; j < x.size(); ++j) {
        lp += x[j] == t[j] ? log_keep : log_flip;
      }
      out.push_back(lp);
    }
    return out;
  };
  return Mechanism::FromLogRows(space, std::move(transcripts),
                                std::move(log_row),
                                RandomizedResponseSpec{flip_prob});
}

namespace {

// Rows of f(x) + noise, memoized by center value.
absl::StatusOr<Mechanism> MakeCenteredNoise(const DatabaseSpace& space,
                                            const Query& f,
                                            const NoiseSpec& noise,
                                            GeneratorSpec descriptor) {
  const auto [lo, hi] = f.Range();
  ASSIGN_OR_RETURN(NoiseGrid grid, MakeNoiseGrid(noise, lo, hi));
  struct Memo {
    absl::Mutex mu;
    absl::flat_hash_map<double, std::vector<double>> by_center
        ABSL_GUARDED_BY(mu);
  };
  auto memo = std::make_shared<Memo>();
  auto shared_grid = std::make_shared<const NoiseGrid>(grid);
  Mechanism::LogRowFn log_row =
      [f, noise, shared_grid,
       memo](const Database& x) -> absl::StatusOr<std::vector<double>> {
    ASSIGN_OR_RETURN(double center, f(x));
    {
      absl::MutexLock lock(&memo->mu);
      auto it = memo->by_center.find(center);
      if (it != memo->by_center.end()) return it->second;
    }
    std::vector<double> row = CellLogProbs(noise, *shared_grid, center);
    absl::MutexLock lock(&memo->mu);
    return memo->by_center.try_emplace(center, std::move(row)).first->second;
  };
  return Mechanism::FromLogRows(space, grid.cells, std::move(log_row),
                                std::move(descriptor));
}

}  // namespace

absl::StatusOr<Mechanism> MakeNoisySum(const DatabaseSpace& space,
                                       const NoiseSpec& noise) {
  RETURN_IF_ERROR(CheckBinaryNumeric(space));
  RETURN_IF_ERROR(NoiseSpec::Create(noise.kind, noise.scale, noise.grid_step,
                                    noise.tail_mass)
                      .status());
  ASSIGN_OR_RETURN(Query sum, Query::Sum(space));
  return MakeCenteredNoise(space, sum, noise, NoisySumSpec{noise});
}

absl::StatusOr<Mechanism> MakeLocalSensitivityLaplace(
    const Query& f, const DatabaseSpace& space, double s, double epsilon,
    double grid_step, double tail_mass) {
  if (!(s > 0.0) || !(epsilon > 0.0)) {
    return absl::InvalidArgumentError("s and epsilon must be positive");
  }
  const double scale = s / epsilon;
  ASSIGN_OR_RETURN(
      NoiseSpec noise,
      NoiseSpec::Create(NoiseKind::kLaplace, scale,
                        grid_step > 0.0 ? grid_step : scale / 8.0, tail_mass));
  return MakeCenteredNoise(space, f, noise,
                           LocalSensitivityLaplaceSpec{f, s, epsilon, noise});
}

absl::StatusOr<Mechanism> MakeFromGenerator(const DatabaseSpace& space,
                                            const GeneratorSpec& spec) {
  if (const auto* rr = std::get_if<RandomizedResponseSpec>(&spec)) {
    return MakeRandomizedResponse(space, rr->flip_prob);
  }
  if (const auto* sum = std::get_if<NoisySumSpec>(&spec)) {
    return MakeNoisySum(space, sum->noise);
  }
  const auto& ls = std::get<LocalSensitivityLaplaceSpec>(spec);
  return MakeLocalSensitivityLaplace(ls.query, space, ls.sensitivity_bound,
                                     ls.epsilon, ls.noise.grid_step,
                                     ls.noise.tail_mass);
}

}  // namespace semdp
