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

// Command-line front end: semdp <analyze|semantic|counterexample|verify|gen>.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "semdp/cli.h"

namespace {

void AddOutput(CLI::App* app, semdp::RunConfig& config, bool with_format) {
  app->add_option("-o,--output", config.output_path,
                  "Report path (default: stdout)");
  if (with_format) {
    app->add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  semdp::RunConfig config;
  CLI::App app{
      "Exact differential-privacy and semantic-privacy analysis of "
      "finite mechanisms"};
  app.require_subcommand(1);

  CLI::App* analyze =
      app.add_subcommand("analyze", "DP parameters of a mechanism");
  analyze->add_option("--mechanism", config.mechanism_path)->required();
  analyze->add_option("--epsilons", config.epsilons, "Comma-separated list")
      ->delimiter(',');
  analyze->add_option("--pointwise-epsilon", config.pointwise_epsilon);
  analyze->add_option("--pointwise-delta", config.pointwise_delta);
  AddOutput(analyze, config, true);

  CLI::App* semantic =
      app.add_subcommand("semantic", "Posterior semantic losses under a prior");
  semantic->add_option("--mechanism", config.mechanism_path)->required();
  semantic->add_option("--prior", config.prior_path)->required();
  semantic->add_option("--real-db", config.real_db,
                       "Weight transcripts by this database's row");
  semantic->add_option("--epsilon", config.epsilon,
                       "Loss threshold for mass_exceeding");
  semantic->add_option("--dp-epsilon", config.dp_epsilon);
  semantic->add_option("--dp-delta", config.dp_delta);
  AddOutput(semantic, config, true);

  CLI::App* counterexample = app.add_subcommand(
      "counterexample", "Gaussian-sum mechanism against an uninformed prior");
  counterexample->add_option("--n", config.n);
  counterexample->add_option("--epsilon", config.epsilon);
  counterexample->add_option("--delta", config.delta);
  counterexample->add_option("--log-base", config.log_base,
                             "Base of the log in sigma^2 = log(1/delta)/eps^2");
  counterexample->add_option("--step-fraction", config.step_fraction,
                             "Grid step as a fraction of sigma");
  counterexample->add_option("--sd-threshold", config.sd_threshold);
  AddOutput(counterexample, config, true);

  CLI::App* verify = app.add_subcommand("verify", "Run the verifier suites");
  verify->add_option("--suite", config.suite, "claims, theorems or all");
  verify->add_option("--trials", config.trials);
  verify->add_option("--seed", config.seed);
  AddOutput(verify, config, false);

  CLI::App* gen = app.add_subcommand("gen", "Write a mechanism file");
  gen->add_option("--type", config.type)->required();
  gen->add_option("--n", config.n)->required();
  gen->add_option("--domain", config.domain, "Comma-separated symbols")
      ->delimiter(',');
  gen->add_option("--default", config.default_symbol);
  gen->add_option("--flip-prob", config.flip_prob);
  gen->add_option("--scale", config.scale, "Laplace lambda or Gaussian sigma");
  gen->add_option("--epsilon", config.epsilon);
  gen->add_option("--delta", config.delta);
  gen->add_option("--log-base", config.log_base);
  gen->add_option("--query", config.query, "sum or median");
  gen->add_option("--s", config.s, "Local-sensitivity bound");
  gen->add_option("--grid-step", config.grid_step);
  gen->add_option("--tail-mass", config.tail_mass);
  AddOutput(gen, config, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return semdp::kExitInputError;
  }
  for (CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();
  return semdp::RunCommand(config, std::cout, std::cerr);
}
