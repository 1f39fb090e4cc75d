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

#include "semdp/cli.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "semdp/database.h"
#include "semdp/dp_analysis.h"
#include "semdp/json_io.h"
#include "semdp/mechanism.h"
#include "semdp/noise.h"
#include "semdp/semantics.h"
#include "semdp/status_macros.h"
#include "semdp/verifiers.h"
#include "semdp/verify_suite.h"

namespace semdp {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string Num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "";
  return absl::StrFormat("%.17g", v);
}

ordered_json JsonNum(double v) {
  if (std::isfinite(v)) return v;
  return Num(v);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Emitter {
  const RunConfig& config;
  std::ostream& out;
  std::ostream& err;

  absl::Status Report(const std::string& text) {
    if (config.output_path.empty()) {
      out << text;
      return absl::OkStatus();
    }
    return WriteFile(config.output_path, text);
  }
  std::ostream& Summary() { return config.output_path.empty() ? err : out; }
};

absl::Status CheckFormat(const RunConfig& config) {
  if (config.format != "csv" && config.format != "json") {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown format '", config.format, "'; expected csv or json"));
  }
  return absl::OkStatus();
}

absl::StatusOr<Mechanism> LoadMechanism(const RunConfig& config) {
  if (config.mechanism_path.empty()) {
    return absl::InvalidArgumentError("--mechanism is required");
  }
  ASSIGN_OR_RETURN(std::string text, ReadFile(config.mechanism_path));
  auto m = ParseMechanismJson(text);
  if (!m.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(config.mechanism_path, ": ", m.status().message()));
  }
  return m;
}

ordered_json PairJson(const DatabaseSpace& space,
                      const std::optional<NeighborPair>& pair) {
  if (!pair.has_value()) return nullptr;
  return ordered_json{{"x", space.Format(pair->x)},
                      {"y", space.Format(pair->y)}};
}

absl::Status Analyze(Emitter& e) {
  const RunConfig& config = e.config;
  RETURN_IF_ERROR(CheckFormat(config));
  ASSIGN_OR_RETURN(Mechanism m, LoadMechanism(config));
  std::optional<IndistParams> pointwise;
  if (config.pointwise_epsilon.has_value() !=
      config.pointwise_delta.has_value()) {
    return absl::InvalidArgumentError(
        "--pointwise-epsilon and --pointwise-delta go together");
  }
  if (config.pointwise_epsilon.has_value()) {
    ASSIGN_OR_RETURN(pointwise, IndistParams::Create(*config.pointwise_epsilon,
                                                     *config.pointwise_delta));
  }
  ASSIGN_OR_RETURN(DpReport report, TightDeltaCurve(m, config.epsilons,
                                                    std::nullopt, pointwise));
  const DatabaseSpace& space = m.space();
  std::string text;
  if (config.format == "csv") {
    text = "epsilon,delta,worst_x,worst_y\n";
    for (const DeltaPoint& p : report.delta_at) {
      absl::StrAppend(&text, Num(p.epsilon), ",", Num(p.delta), ",",
                      p.worst ? CsvField(space.Format(p.worst->x)) : "", ",",
                      p.worst ? CsvField(space.Format(p.worst->y)) : "", "\n");
    }
  } else {
    ordered_json root;
    root["epsilon_max"] = JsonNum(report.epsilon_max.epsilon);
    root["worst_pair"] = PairJson(space, report.epsilon_max.worst);
    ordered_json curve = ordered_json::array();
    for (const DeltaPoint& p : report.delta_at) {
      curve.push_back({{"epsilon", JsonNum(p.epsilon)},
                       {"delta", JsonNum(p.delta)},
                       {"worst_pair", PairJson(space, p.worst)}});
    }
    root["delta_at"] = std::move(curve);
    if (report.pointwise.has_value()) {
      root["pointwise"] = {
          {"epsilon", report.pointwise_params->epsilon},
          {"delta", report.pointwise_params->delta},
          {"bad_mass_x", report.pointwise->bad_mass_x},
          {"bad_mass_y", report.pointwise->bad_mass_y},
          {"bad_outcomes", report.pointwise->bad_outcomes},
          {"passes", report.pointwise->Passes(report.pointwise_params->delta)}};
    }
    text = root.dump(2) + "\n";
  }
  RETURN_IF_ERROR(e.Report(text));
  e.Summary() << "epsilon_max=" << Num(report.epsilon_max.epsilon) << "\n";
  return absl::OkStatus();
}

absl::Status Semantic(Emitter& e) {
  const RunConfig& config = e.config;
  RETURN_IF_ERROR(CheckFormat(config));
  ASSIGN_OR_RETURN(Mechanism m, LoadMechanism(config));
  if (config.prior_path.empty()) {
    return absl::InvalidArgumentError("--prior is required");
  }
  ASSIGN_OR_RETURN(std::string prior_text, ReadFile(config.prior_path));
  auto prior = ParsePriorJson(prior_text, m.space());
  if (!prior.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(config.prior_path, ": ", prior.status().message()));
  }
  SemanticReport report;
  if (config.real_db.has_value()) {
    ASSIGN_OR_RETURN(Database real, m.space().Parse(*config.real_db));
    ASSIGN_OR_RETURN(report, ComputeRealityObliviousReport(m, *prior, real));
  } else {
    ASSIGN_OR_RETURN(report, ComputeSemanticReport(m, *prior));
  }
  if (config.dp_epsilon.has_value() || config.dp_delta.has_value()) {
    ASSIGN_OR_RETURN(IndistParams params,
                     IndistParams::Create(config.dp_epsilon.value_or(0.0),
                                          config.dp_delta.value_or(0.0)));
    ASSIGN_OR_RETURN(SemanticBoundCheck check,
                     CheckSemanticBound(report, m.space().n(), params));
    report.bound_margins["semantic_delta"] = check.Margin();
  }
  const double mass = report.MassExceeding(config.epsilon);
  const bool real =
      report.weighting == SemanticReport::Weighting::kRealDatabase;
  const int n = m.space().n();
  std::string text;
  if (config.format == "csv") {
    text =
        "transcript,game_index,sd,transcript_prob_game0,"
        "transcript_prob_real_db\n";
    for (const TranscriptSemantics& t : report.transcripts) {
      const std::string prefix = CsvField(m.transcripts().label(t.transcript));
      const std::string tail =
          absl::StrCat(Num(t.prob_prior_mixture), ",",
                       real ? Num(t.prob_real_db) : "", "\n");
      for (int g = 1; g <= n; ++g) {
        absl::StrAppend(&text, prefix, ",", g, ",", Num(t.sd_by_game[g - 1]),
                        ",", tail);
      }
    }
  } else {
    ordered_json root;
    root["weighting"] = real ? "real_db" : "prior_mixture";
    root["real_db"] = report.real_db.has_value()
                          ? ordered_json(m.space().Format(*report.real_db))
                          : ordered_json(nullptr);
    root["epsilon_star"] = report.epsilon_star;
    root["epsilon"] = config.epsilon;
    root["mass_exceeding"] = mass;
    root["undefined_mass"] = report.undefined_mass;
    root["skipped_games"] = report.skipped_games;
    ordered_json margins = ordered_json::object();
    for (const auto& [name, margin] : report.bound_margins) {
      margins[name] = margin;
    }
    root["bound_margins"] = std::move(margins);
    ordered_json rows = ordered_json::array();
    for (const TranscriptSemantics& t : report.transcripts) {
      ordered_json row;
      row["transcript"] = m.transcripts().label(t.transcript);
      row["defined"] = t.defined;
      row["loss"] = t.loss;
      row["worst_game"] = t.worst_game;
      row["transcript_prob_game0"] = t.prob_prior_mixture;
      if (real) row["transcript_prob_real_db"] = t.prob_real_db;
      rows.push_back(std::move(row));
    }
    root["transcripts"] = std::move(rows);
    text = root.dump(2) + "\n";
  }
  RETURN_IF_ERROR(e.Report(text));
  e.Summary() << "weighting=" << (real ? "real_db" : "prior_mixture")
              << " epsilon_star=" << Num(report.epsilon_star)
              << " mass_exceeding(" << Num(config.epsilon) << ")=" << Num(mass)
              << "\n";
  return absl::OkStatus();
}

absl::Status Counterexample(Emitter& e) {
  const RunConfig& config = e.config;
  RETURN_IF_ERROR(CheckFormat(config));
  CounterexampleOptions options;
  ASSIGN_OR_RETURN(options.log_base, ParseLogBase(config.log_base));
  options.step_fraction = config.step_fraction;
  options.sd_threshold = config.sd_threshold;
  options.tail_mass = config.tail_mass;
  ASSIGN_OR_RETURN(
      CounterexampleReport r,
      RunCounterexample(config.n, config.epsilon, config.delta, options));
  std::string text;
  if (config.format == "csv") {
    text = "transcript,ratio,posterior_x0,sd_game1\n";
    for (const CounterexampleRow& row : r.rows) {
      absl::StrAppend(&text, CsvField(row.transcript), ",", Num(row.ratio), ",",
                      Num(row.posterior_x0), ",", Num(row.sd_game1), "\n");
    }
  } else {
    ordered_json root;
    root["n"] = r.n;
    root["epsilon"] = r.params.epsilon;
    root["delta"] = r.params.delta;
    root["sigma"] = r.sigma;
    root["grid_step"] = r.grid_step;
    root["worst_touched_delta"] = r.worst_touched_delta;
    root["touched_pass"] = r.touched_pass;
    root["sd_threshold"] = r.sd_threshold;
    root["mass_at_threshold"] = r.mass_at_threshold;
    root["game1_uniform"] = r.game1_uniform;
    root["log_ratio_at_n"] = {
        {"observed", r.observed_log_ratio_at_n},
        {"predicted_two_sigma_squared", r.predicted_log_ratio_at_n},
        {"predicted_two_sigma", r.predicted_log_ratio_at_n_alt}};
    ordered_json rows = ordered_json::array();
    for (const CounterexampleRow& row : r.rows) {
      rows.push_back({{"transcript", row.transcript},
                      {"ratio", JsonNum(row.ratio)},
                      {"predicted_ratio", JsonNum(row.predicted_ratio)},
                      {"predicted_ratio_alt", JsonNum(row.predicted_ratio_alt)},
                      {"posterior_x0", row.posterior_x0},
                      {"posterior_game1_x0", row.posterior_game1_x0},
                      {"sd_game1", row.sd_game1},
                      {"prob_real_db", row.prob_real_db}});
    }
    root["rows"] = std::move(rows);
    text = root.dump(2) + "\n";
  }
  RETURN_IF_ERROR(e.Report(text));
  e.Summary() << absl::StrFormat(
      "sigma=%.6g touched_max_delta=%.6g touched_pass=%d "
      "mass_sd_ge_%.6g=%.6g game1_uniform=%d log_ratio_at_n=%.6g "
      "predicted=%.6g predicted_alt=%.6g\n",
      r.sigma, r.worst_touched_delta, r.touched_pass, r.sd_threshold,
      r.mass_at_threshold, r.game1_uniform, r.observed_log_ratio_at_n,
      r.predicted_log_ratio_at_n, r.predicted_log_ratio_at_n_alt);
  return absl::OkStatus();
}

absl::StatusOr<int> Verify(Emitter& e) {
  const RunConfig& config = e.config;
  ASSIGN_OR_RETURN(std::vector<LawResult> laws,
                   RunVerifySuite(config.suite, {config.trials, config.seed}));
  std::string text;
  for (const LawResult& law : laws) {
    absl::StrAppend(&text, FormatLawLine(law), "\n");
  }
  RETURN_IF_ERROR(e.Report(text));
  return AllPass(laws) ? kExitOk : kExitVerificationFailure;
}

absl::Status Gen(Emitter& e) {
  const RunConfig& config = e.config;
  auto space = config.default_symbol.has_value()
                   ? DatabaseSpace::Create(config.domain, config.n,
                                           *config.default_symbol)
                   : DatabaseSpace::Create(config.domain, config.n);
  RETURN_IF_ERROR(space.status());
  const double step = config.grid_step.value_or(0.0);
  std::optional<Mechanism> m;
  if (config.type == "randomized_response") {
    ASSIGN_OR_RETURN(Mechanism rr,
                     MakeRandomizedResponse(*space, config.flip_prob));
    ASSIGN_OR_RETURN(m, Densify(rr));
  } else if (config.type == "laplace_sum" || config.type == "gaussian_sum") {
    const bool laplace = config.type == "laplace_sum";
    double scale = 0.0;
    if (config.scale.has_value()) {
      scale = *config.scale;
    } else if (laplace) {
      if (!(config.epsilon > 0.0)) {
        return absl::InvalidArgumentError("epsilon must be positive");
      }
      scale = 1.0 / config.epsilon;
    } else {
      ASSIGN_OR_RETURN(double base, ParseLogBase(config.log_base));
      ASSIGN_OR_RETURN(scale,
                       GaussianSigma(config.epsilon, config.delta, base));
    }
    const NoiseKind kind = laplace ? NoiseKind::kLaplace : NoiseKind::kGaussian;
    ASSIGN_OR_RETURN(NoiseSpec noise,
                     NoiseSpec::Create(kind, scale, step > 0 ? step : scale / 8,
                                       config.tail_mass));
    ASSIGN_OR_RETURN(m, MakeNoisySum(*space, noise));
  } else if (config.type == "ls_laplace") {
    absl::StatusOr<Query> q;
    if (config.query == "sum") {
      q = Query::Sum(*space);
    } else if (config.query == "median") {
      q = Query::Median(*space);
    } else {
      return absl::InvalidArgumentError("--query must be sum or median");
    }
    RETURN_IF_ERROR(q.status());
    ASSIGN_OR_RETURN(
        m, MakeLocalSensitivityLaplace(*q, *space, config.s, config.epsilon,
                                       step, config.tail_mass));
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown --type '", config.type,
        "'; expected randomized_response, laplace_sum, gaussian_sum or "
        "ls_laplace"));
  }
  ASSIGN_OR_RETURN(std::string text, MechanismToJson(*m));
  return e.Report(text);
}

}  // namespace

absl::StatusOr<double> ParseLogBase(absl::string_view text) {
  if (text == "e") return std::exp(1.0);
  double base = 0.0;
  if (!absl::SimpleAtod(text, &base) || !(base > 1.0) || std::isinf(base)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "log base must be 'e' or a number above 1, got '", text, "'"));
  }
  return base;
}

int RunCommand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Emitter e{config, out, err};
  absl::Status status;
  int code = kExitOk;
  if (config.command == "analyze") {
    status = Analyze(e);
  } else if (config.command == "semantic") {
    status = Semantic(e);
  } else if (config.command == "counterexample") {
    status = Counterexample(e);
  } else if (config.command == "verify") {
    absl::StatusOr<int> result = Verify(e);
    status = result.status();
    if (result.ok()) code = *result;
  } else if (config.command == "gen") {
    status = Gen(e);
  } else {
    status = absl::InvalidArgumentError(
        absl::StrCat("unknown command '", config.command, "'"));
  }
  if (!status.ok()) {
    err << "error: " << status.message() << "\n";
    return kExitInputError;
  }
  return code;
}

}  // namespace semdp
