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

#include "semdp/verify_suite.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "semdp/database.h"
#include "semdp/distribution.h"
#include "semdp/dp_analysis.h"
#include "semdp/indistinguishability.h"
#include "semdp/mechanism.h"
#include "semdp/random_instances.h"
#include "semdp/semantics.h"
#include "semdp/status_macros.h"
#include "semdp/verifiers.h"

namespace semdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class LawAccumulator {
 public:
  explicit LawAccumulator(std::string name) : name_(std::move(name)) {}

  void Add(double margin) {
    ++trials_;
    worst_ = std::min(worst_, margin);
  }
  void Fail(std::string why) {
    failed_ = true;
    if (detail_.empty()) detail_ = std::move(why);
  }
  void Note(std::string detail) { detail_ = std::move(detail); }

  LawResult Finish(bool informational = false) const {
    LawResult r;
    r.name = name_;
    r.trials = trials_;
    r.worst_margin = trials_ == 0 ? 0.0 : worst_;
    r.pass = !failed_ && trials_ > 0 && r.worst_margin >= -kMarginTolerance;
    r.informational = informational;
    r.detail = detail_;
    return r;
  }

 private:
  std::string name_;
  int trials_ = 0;
  double worst_ = kInf;
  bool failed_ = false;
  std::string detail_;
};

// Independent stream per law so adding trials to one law leaves the others
// unchanged.
RandomInstances LawRng(const SuiteOptions& options, uint64_t law) {
  return RandomInstances(options.seed * 0x9E3779B97F4A7C15ULL + law);
}

Distribution Dist(std::vector<double> p) {
  auto labels = RandomInstances::Labels(p.size(), "o");
  return *Distribution::Create(std::move(labels), std::move(p));
}

double Tight(const Distribution& p, const Distribution& q, double e) {
  return TightDelta(p.probs(), q.probs(), e);
}

double MaxBad(const Distribution& p, const Distribution& q,
              const IndistParams& params) {
  PointwiseReport r = PointwiseCheck(p, q, params);
  return std::max(r.bad_mass_x, r.bad_mass_y);
}

struct Fixture {
  Distribution p;
  Distribution q;
  double epsilon;
};

std::vector<Fixture> AdversarialPairs() {
  return {
      {Dist({0.5, 0.3, 0.2}), Dist({0.5, 0.3, 0.2}), 0.3},
      {Dist({0.75, 0.25}), Dist({0.25, 0.75}), std::log(3.0)},
      {Dist({1.0, 0.0}), Dist({0.0, 1.0}), 1.0},
      // Both outcomes fall outside the doubled ratio bound.
      {Dist({0.7327, 0.2673}), Dist({0.2975, 0.7025}), 0.4423},
  };
}

LawResult PointwiseImpliesIndist(const SuiteOptions& options) {
  LawAccumulator law("pointwise-implies-indist");
  RandomInstances rng = LawRng(options, 1);
  auto check = [&](const Distribution& p, const Distribution& q, double e) {
    const IndistParams at{e, 0.0};
    const double delta = MaxBad(p, q, at);
    law.Add(delta - Tight(p, q, e));
  };
  for (const Fixture& f : AdversarialPairs()) check(f.p, f.q, f.epsilon);
  for (int trial = 0; trial < options.trials; ++trial) {
    auto [p, q] = rng.Pair(rng.UniformInt(2, 8));
    check(p, q, rng.Uniform(0.0, 1.5));
  }
  return law.Finish();
}

// The stated indist-to-pointwise constant and, informationally, the
// constant delta (1 + 1/eps + 1/(eps e^eps)).
std::vector<LawResult> IndistImpliesPointwise(const SuiteOptions& options) {
  LawAccumulator stated("indist-implies-pointwise");
  LawAccumulator corrected("indist-implies-pointwise-loose");
  RandomInstances rng = LawRng(options, 2);
  int failures_x = 0;
  int failures_y = 0;
  auto check = [&](const Distribution& p, const Distribution& q, double e) {
    const double delta = Tight(p, q, e);
    const IndistParams converted = *IndistToPointwise({e, delta});
    const PointwiseReport r = PointwiseCheck(p, q, converted);
    if (r.bad_mass_x > converted.delta + kMarginTolerance) ++failures_x;
    if (r.bad_mass_y > converted.delta + kMarginTolerance) ++failures_y;
    const double bad = std::max(r.bad_mass_x, r.bad_mass_y);
    stated.Add(converted.delta - bad);
    const double loose = delta * (1.0 + 1.0 / e + 1.0 / (e * std::exp(e)));
    corrected.Add(loose - bad);
  };
  for (const Fixture& f : AdversarialPairs()) {
    if (f.epsilon > 0.0) check(f.p, f.q, f.epsilon);
  }
  for (int trial = 0; trial < options.trials; ++trial) {
    auto [p, q] = rng.Pair(rng.UniformInt(2, 8));
    check(p, q, rng.Uniform(0.05, 1.5));
  }
  stated.Note(
      absl::StrCat("violations_x=", failures_x, " violations_y=", failures_y));
  return {stated.Finish(), corrected.Finish(/*informational=*/true)};
}

struct Family {
  Distribution prior;
  std::map<std::string, Distribution> rows_a;
  std::map<std::string, Distribution> rows_b;
};

LawResult MixtureLaw(const SuiteOptions& options, bool part_four) {
  LawAccumulator law(part_four ? "mixture-with-bad-indices" : "mixture-indist");
  RandomInstances rng = LawRng(options, part_four ? 4 : 3);
  const int families = std::min(options.trials, 200);
  for (int trial = 0; trial < families; ++trial) {
    const size_t m = rng.UniformInt(2, 5);
    const size_t k = rng.UniformInt(2, 6);
    auto indices = RandomInstances::Labels(m, "i");
    Distribution prior = *Distribution::Create(indices, rng.Dirichlet(m));
    const double e = rng.Uniform(0.0, 1.0);
    std::map<std::string, Distribution> rows_a;
    std::map<std::string, Distribution> rows_b;
    double row_delta = 0.0;
    double bad_index_mass = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const bool bad = part_four && rng.Uniform(0.0, 1.0) < 0.3;
      Distribution a = Dist(rng.Dirichlet(k));
      Distribution b =
          bad ? Dist(rng.Sparse(k, 0.5))
              : Dist(rng.Perturb(
                    std::vector<double>(a.probs().begin(), a.probs().end()),
                    rng.Uniform(0.0, 0.3)));
      if (bad) {
        bad_index_mass += prior[i];
      } else {
        row_delta = std::max(row_delta, Tight(a, b, e));
      }
      rows_a.emplace(indices->label(i), std::move(a));
      rows_b.emplace(indices->label(i), std::move(b));
    }
    const double delta = std::max(row_delta, bad_index_mass);
    auto joint = PairWithInput(prior, rows_a, rows_b);
    if (!joint.ok()) {
      law.Fail(std::string(joint.status().message()));
      continue;
    }
    const double observed =
        TightDelta(joint->first.probs(), joint->second.probs(), e);
    law.Add((part_four ? 2.0 * delta : delta) - observed);
  }
  return law.Finish();
}

LawResult PostprocessingLaw(const SuiteOptions& options) {
  LawAccumulator law("postprocessing");
  RandomInstances rng = LawRng(options, 5);
  auto check = [&](const Distribution& p, const Distribution& q,
                   const Channel& g) {
    Distribution gp = *Postprocess(p, g);
    Distribution gq = *Postprocess(q, g);
    for (double e : {0.0, 0.1, 1.0, rng.Uniform(0.0, 2.0)}) {
      law.Add(Tight(p, q, e) - Tight(gp, gq, e));
    }
  };
  for (const Fixture& f : AdversarialPairs()) {
    // Identity, constant and random channels.
    std::map<std::string, Distribution> identity;
    std::map<std::string, Distribution> constant;
    const OutcomeSet& labels = f.p.outcomes();
    for (size_t a = 0; a < labels.size(); ++a) {
      std::vector<double> unit(labels.size(), 0.0);
      unit[a] = 1.0;
      identity.emplace(labels.label(a), Dist(unit));
      constant.emplace(labels.label(a), Dist({1.0}));
    }
    check(f.p, f.q, *Channel::Create(identity));
    check(f.p, f.q, *Channel::Create(constant));
    check(f.p, f.q, rng.RandomChannel(labels, 3));
  }
  for (int trial = 0; trial < options.trials; ++trial) {
    auto [p, q] = rng.Pair(rng.UniformInt(2, 8));
    check(p, q, rng.RandomChannel(p.outcomes(), rng.UniformInt(1, 6)));
  }
  return law.Finish();
}

LawResult SdFromIndistLaw(const SuiteOptions& options) {
  LawAccumulator law("sd-from-indist");
  RandomInstances rng = LawRng(options, 6);
  auto check = [&](const Distribution& p, const Distribution& q) {
    const double sd = StatisticalDifference(p, q);
    for (int step = 0; step <= 200; ++step) {
      const double e = step * 0.01;
      law.Add(SdBoundFromIndist({e, Tight(p, q, e)}) - sd);
    }
  };
  for (const Fixture& f : AdversarialPairs()) check(f.p, f.q);
  for (int trial = 0; trial < options.trials; ++trial) {
    auto [p, q] = rng.Pair(rng.UniformInt(2, 8));
    check(p, q);
  }
  return law.Finish();
}

// ---------------------------------------------------------------------------
// Theorem laws.

absl::StatusOr<DatabaseSpace> BinarySpace(int n) {
  return DatabaseSpace::Create({"0", "1"}, n);
}

absl::StatusOr<LawResult> PureDpToSemantic(const SuiteOptions& options) {
  LawAccumulator law("pure-dp-to-semantic");
  RandomInstances rng = LawRng(options, 21);
  const int priors = std::clamp(options.trials / 5, 1, 200);
  for (double p : {0.1, 0.25, 0.4}) {
    const double e = std::log((1.0 - p) / p);
    for (int n = 1; n <= 3; ++n) {
      ASSIGN_OR_RETURN(DatabaseSpace space, BinarySpace(n));
      ASSIGN_OR_RETURN(Mechanism m, MakeRandomizedResponse(space, p));
      for (int k = 0; k < priors; ++k) {
        ASSIGN_OR_RETURN(BeliefPrior prior, rng.Prior(space, 8));
        ASSIGN_OR_RETURN(SemanticReport r, ComputeSemanticReport(m, prior));
        law.Add(EpsilonBar(e) - r.epsilon_star);
      }
    }
  }
  return law.Finish();
}

absl::StatusOr<LawResult> SemanticToPureDp() {
  LawAccumulator law("semantic-to-pure-dp");
  for (double p : {0.1, 0.25, 0.4}) {
    const double e = std::log((1.0 - p) / p);
    for (int n = 1; n <= 3; ++n) {
      ASSIGN_OR_RETURN(DatabaseSpace space, BinarySpace(n));
      ASSIGN_OR_RETURN(Mechanism m, MakeRandomizedResponse(space, p));
      ASSIGN_OR_RETURN(ExtractionReport r,
                       SemanticToDpExtraction(m, EpsilonBar(e), 0.0));
      ASSIGN_OR_RETURN(EpsilonMaxResult actual, EpsilonMax(m));
      if (!r.premise_holds) law.Fail("two-point premise failed");
      if (!r.claim_certified) law.Fail("(2 eps, 0) not certified");
      law.Add(r.claimed.epsilon - actual.epsilon);
    }
  }
  return law.Finish();
}

absl::StatusOr<LawResult> ApproxDpToSemantic(const SuiteOptions& options) {
  LawAccumulator law("approx-dp-to-semantic");
  RandomInstances rng = LawRng(options, 24);
  const int priors = std::clamp(options.trials / 20, 1, 50);
  const std::pair<double, double> targets[] = {{0.5, 1e-4}, {1.0, 1e-6}};
  for (const auto& [e, target] : targets) {
    for (int n : {2, 4, 6}) {
      ASSIGN_OR_RETURN(DatabaseSpace space, BinarySpace(n));
      ASSIGN_OR_RETURN(NoiseSpec noise,
                       NoiseSpec::Default(NoiseKind::kLaplace, 1.0 / e));
      ASSIGN_OR_RETURN(Mechanism m, MakeNoisySum(space, noise));
      const double eps_list[] = {e};
      ASSIGN_OR_RETURN(DpReport dp, TightDeltaCurve(m, eps_list));
      if (dp.delta_at[0].delta > target) {
        law.Fail(absl::StrFormat("measured delta %.3g above %.3g",
                                 dp.delta_at[0].delta, target));
      }
      for (int k = 0; k < priors; ++k) {
        ASSIGN_OR_RETURN(BeliefPrior prior, rng.Prior(space, 16));
        ASSIGN_OR_RETURN(SemanticReport r, ComputeSemanticReport(m, prior));
        ASSIGN_OR_RETURN(SemanticBoundCheck check,
                         CheckSemanticBound(r, n, {e, target}));
        law.Add(check.Margin());
      }
    }
  }
  return law.Finish();
}

}  // namespace

absl::StatusOr<Mechanism> MakeLeakyRandomizedResponse(int n, double flip_prob,
                                                      double leak_prob) {
  ASSIGN_OR_RETURN(DatabaseSpace space, BinarySpace(n));
  ASSIGN_OR_RETURN(std::vector<Database> all, space.Enumerate());
  std::vector<std::string> labels;
  for (const Database& t : all) labels.push_back(space.Format(t));
  for (const Database& t : all) {
    labels.push_back(absl::StrCat("leak:", space.Format(t)));
  }
  ASSIGN_OR_RETURN(auto transcripts, OutcomeSet::Create(std::move(labels)));
  std::map<Database, std::vector<double>> rows;
  for (size_t i = 0; i < all.size(); ++i) {
    std::vector<double> row(2 * all.size(), 0.0);
    for (size_t j = 0; j < all.size(); ++j) {
      const int flips = HammingDistance(all[i], all[j]);
      row[j] = (1.0 - leak_prob) * std::pow(flip_prob, flips) *
               std::pow(1.0 - flip_prob, n - flips);
    }
    row[all.size() + i] = leak_prob;
    rows.emplace(all[i], std::move(row));
  }
  return Mechanism::Dense(space, std::move(transcripts), std::move(rows));
}

namespace {

absl::StatusOr<LawResult> SemanticToApproxDp() {
  LawAccumulator law("semantic-to-approx-dp");
  constexpr double kLeak = 0.01;
  constexpr double kEpsilonBar = 0.25;
  for (int n = 1; n <= 2; ++n) {
    ASSIGN_OR_RETURN(Mechanism m, MakeLeakyRandomizedResponse(n, 0.45, kLeak));
    ASSIGN_OR_RETURN(ExtractionReport r,
                     SemanticToDpExtraction(m, kEpsilonBar, kLeak));
    if (!r.premise_holds) law.Fail("two-point premise failed");
    if (!r.claim_certified) law.Fail("(2 eps, 2 delta) not certified");
    const double eps_list[] = {r.claimed.epsilon};
    ASSIGN_OR_RETURN(DpReport dp, TightDeltaCurve(m, eps_list));
    law.Add(r.claimed.delta - dp.delta_at[0].delta);
  }
  return law.Finish();
}

}  // namespace

absl::StatusOr<MedianSetup> MakeMedianSetup() {
  const IndistParams params{0.1, 1e-4};
  ASSIGN_OR_RETURN(DatabaseSpace space,
                   DatabaseSpace::Create({"0", "1", "2", "3", "4"}, 5));
  ASSIGN_OR_RETURN(Query median, Query::Median(space));
  ASSIGN_OR_RETURN(Mechanism m, MakeLocalSensitivityLaplace(median, space, 1.0,
                                                            params.epsilon));
  ASSIGN_OR_RETURN(std::vector<Database> all, space.Enumerate());
  std::vector<Database> low;
  for (const Database& x : all) {
    ASSIGN_OR_RETURN(double ls, LocalSensitivity(median, space, x));
    if (ls <= 1.0) low.push_back(x);
  }
  return MedianSetup{std::move(space), std::move(m), params, std::move(low)};
}

namespace {

absl::StatusOr<LawResult> GoodSetLaw(const SuiteOptions& options) {
  LawAccumulator law("good-set-semantic");
  RandomInstances rng = LawRng(options, 51);
  ASSIGN_OR_RETURN(MedianSetup setup, MakeMedianSetup());
  ASSIGN_OR_RETURN(std::vector<Database> all, setup.space.Enumerate());
  absl::flat_hash_set<Database> low(setup.low_sensitivity.begin(),
                                    setup.low_sensitivity.end());
  std::vector<Database> high;
  for (const Database& x : all) {
    if (!low.contains(x)) high.push_back(x);
  }
  const int priors = std::clamp(options.trials / 100, 1, 10);
  for (int k = 0; k < priors; ++k) {
    std::vector<Database> support;
    for (int j = 0; j < 12; ++j) {
      support.push_back(setup.low_sensitivity[rng.UniformInt(
          0, static_cast<int>(setup.low_sensitivity.size()) - 1)]);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<double> w = rng.Dirichlet(support.size());
    ASSIGN_OR_RETURN(BeliefPrior prior,
                     BeliefPrior::Create(setup.space, support, w));
    ASSIGN_OR_RETURN(GoodSetReport r,
                     VerifyGoodSetBound(setup.mechanism, setup.params, prior));
    if (!r.applicable) law.Fail("prior on low-sensitivity set not applicable");
    if (r.good_set_size != setup.low_sensitivity.size()) {
      law.Fail("good set differs from {LS <= 1}");
    }
    law.Add(r.check.Margin());
  }
  // Half the mass outside the good set: the precondition fails.
  ASSIGN_OR_RETURN(
      BeliefPrior half,
      BeliefPrior::Uniform(setup.space,
                           {setup.low_sensitivity.front(), high.front()}));
  ASSIGN_OR_RETURN(GoodSetReport r,
                   VerifyGoodSetBound(setup.mechanism, setup.params, half));
  if (r.applicable) law.Fail("b[E] = 0.5 prior treated as applicable");
  return law.Finish();
}

absl::StatusOr<LawResult> InformedBeliefLaw(const SuiteOptions& options) {
  LawAccumulator law("informed-belief-semantic");
  RandomInstances rng = LawRng(options, 103);
  constexpr double kDelta = 1e-6;
  for (double p : {0.1, 0.25, 0.4}) {
    const double e = std::log((1.0 - p) / p);
    const int n = 3;
    ASSIGN_OR_RETURN(DatabaseSpace space, BinarySpace(n));
    ASSIGN_OR_RETURN(Mechanism m, MakeRandomizedResponse(space, p));
    for (int r = 0; r < 5; ++r) {
      Database real = rng.RandomDatabase(space);
      for (int i = 1; i <= n; ++i) {
        ASSIGN_OR_RETURN(BeliefPrior prior,
                         InformedPrior(space, real, i, rng.Dirichlet(2)));
        ASSIGN_OR_RETURN(SemanticReport report,
                         ComputeRealityObliviousReport(m, prior, real));
        ASSIGN_OR_RETURN(SemanticBoundCheck check,
                         CheckSemanticBound(report, n, {e, kDelta}));
        law.Add(check.Margin());
      }
    }
  }
  return law.Finish();
}

absl::StatusOr<LawResult> ConditionalIndistLaw(const SuiteOptions& options) {
  LawAccumulator law("conditional-indist");
  RandomInstances rng = LawRng(options, 41);
  const int pairs = std::clamp(options.trials / 10, 1, 100);
  for (int k = 0; k < pairs; ++k) {
    auto [x, y] = rng.JointPair(6, 6);
    const double e = rng.Uniform(0.1, 1.0);
    const IndistParams params{e, TightDelta(x.probs(), y.probs(), e)};
    ASSIGN_OR_RETURN(ConditionalReport r,
                     VerifyConditionalIndist(x, y, params));
    if (!r.premise) law.Fail("joints fail their own tight parameters");
    law.Add(r.Margin());
  }
  return law.Finish();
}

absl::StatusOr<LawResult> ConditionalSdLaw(const SuiteOptions& options) {
  LawAccumulator law("conditional-sd");
  RandomInstances rng = LawRng(options, 42);
  const int instances = std::clamp(options.trials / 20, 1, 50);
  for (int k = 0; k < instances; ++k) {
    const int n = rng.UniformInt(2, 3);
    ASSIGN_OR_RETURN(DatabaseSpace space, BinarySpace(n));
    ASSIGN_OR_RETURN(Mechanism m, rng.DenseMechanism(space, 6));
    ASSIGN_OR_RETURN(BeliefPrior prior, rng.Prior(space, 8));
    ASSIGN_OR_RETURN(JointTable real, PriorJoint(m, prior));
    for (int i = 1; i <= n; ++i) {
      ASSIGN_OR_RETURN(Mechanism game, GameMechanism(m, i));
      ASSIGN_OR_RETURN(JointTable suppressed, PriorJoint(game, prior));
      const double e = rng.Uniform(0.1, 1.0);
      const IndistParams params{
          e, TightDelta(real.probs(), suppressed.probs(), e)};
      ASSIGN_OR_RETURN(ConditionalReport r,
                       VerifyConditionalIndist(real, suppressed, params));
      law.Add(r.SdMargin());
    }
  }
  return law.Finish();
}

}  // namespace

std::vector<LawResult> RunClaimLaws(const SuiteOptions& options) {
  std::vector<LawResult> out;
  out.push_back(PointwiseImpliesIndist(options));
  for (LawResult& r : IndistImpliesPointwise(options))
    out.push_back(std::move(r));
  out.push_back(MixtureLaw(options, /*part_four=*/false));
  out.push_back(MixtureLaw(options, /*part_four=*/true));
  out.push_back(PostprocessingLaw(options));
  out.push_back(SdFromIndistLaw(options));
  return out;
}

absl::StatusOr<std::vector<LawResult>> RunTheoremLaws(
    const SuiteOptions& options) {
  std::vector<LawResult> out;
  ASSIGN_OR_RETURN(LawResult a, PureDpToSemantic(options));
  out.push_back(std::move(a));
  ASSIGN_OR_RETURN(LawResult b, SemanticToPureDp());
  out.push_back(std::move(b));
  ASSIGN_OR_RETURN(LawResult c, ApproxDpToSemantic(options));
  out.push_back(std::move(c));
  ASSIGN_OR_RETURN(LawResult d, SemanticToApproxDp());
  out.push_back(std::move(d));
  ASSIGN_OR_RETURN(LawResult e, GoodSetLaw(options));
  out.push_back(std::move(e));
  ASSIGN_OR_RETURN(LawResult f, InformedBeliefLaw(options));
  out.push_back(std::move(f));
  ASSIGN_OR_RETURN(LawResult g, ConditionalIndistLaw(options));
  out.push_back(std::move(g));
  ASSIGN_OR_RETURN(LawResult h, ConditionalSdLaw(options));
  out.push_back(std::move(h));
  return out;
}

absl::StatusOr<std::vector<LawResult>> RunVerifySuite(
    absl::string_view suite, const SuiteOptions& options) {
  if (options.trials < 1) {
    return absl::InvalidArgumentError("trials must be positive");
  }
  std::vector<LawResult> out;
  if (suite == "claims" || suite == "all") out = RunClaimLaws(options);
  if (suite == "theorems" || suite == "all") {
    ASSIGN_OR_RETURN(std::vector<LawResult> theorems, RunTheoremLaws(options));
    for (LawResult& r : theorems) out.push_back(std::move(r));
  }
  if (suite != "claims" && suite != "theorems" && suite != "all") {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown suite '", suite, "'; expected claims, theorems or all"));
  }
  return out;
}

std::string FormatLawLine(const LawResult& law) {
  const char* verdict = law.informational ? "INFO" : law.pass ? "PASS" : "FAIL";
  std::string line =
      absl::StrFormat("%s %s trials=%d worst_margin=%.6e", verdict, law.name,
                      law.trials, law.worst_margin);
  if (!law.detail.empty()) absl::StrAppend(&line, " ", law.detail);
  return line;
}

bool AllPass(const std::vector<LawResult>& laws) {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) {
    return r.informational || r.pass;
  });
}

}  // namespace semdp
