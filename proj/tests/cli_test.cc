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
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "semdp/json_io.h"
#include "semdp/mechanism.h"
#include "tests/test_util.h"

namespace semdp {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const RunConfig& config) {
  std::ostringstream out, err;
  const int code = RunCommand(config, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/semdp_cli_" + name;
}

std::vector<std::string> Lines(const std::string& text) {
  return absl::StrSplit(text, '\n', absl::SkipEmpty());
}

std::string WriteRandomizedResponse(int n, const std::string& name) {
  RunConfig gen;
  gen.command = "gen";
  gen.type = "randomized_response";
  gen.n = n;
  gen.flip_prob = 0.25;
  gen.output_path = TempPath(name);
  EXPECT_EQ(Invoke(gen).code, kExitOk);
  return gen.output_path;
}

std::string WriteUniformPrior(const std::string& name) {
  const std::string path = TempPath(name);
  EXPECT_TRUE(WriteFile(path, R"([{"database": "0,0", "weight": "0.25"},
                                  {"database": "0,1", "weight": "0.25"},
                                  {"database": "1,0", "weight": "0.25"},
                                  {"database": "1,1", "weight": "0.25"}])")
                  .ok());
  return path;
}

TEST(ParseLogBaseTest, AcceptsEAndNumbers) {
  EXPECT_NEAR(*ParseLogBase("e"), std::exp(1.0), 0.0);
  EXPECT_EQ(*ParseLogBase("2"), 2.0);
  EXPECT_FALSE(ParseLogBase("1").ok());
  EXPECT_FALSE(ParseLogBase("ten").ok());
}

TEST(GenTest, RandomizedResponseIsFourByFourMatrix) {
  const std::string path = WriteRandomizedResponse(2, "rr2.json");
  ASSERT_OK_AND_ASSIGN(std::string text, ReadFile(path));
  EXPECT_THAT(text, HasSubstr("\"matrix\""));
  ASSERT_OK_AND_ASSIGN(Mechanism m, ParseMechanismJson(text));
  EXPECT_TRUE(m.is_dense());
  EXPECT_EQ(m.transcripts().size(), 4u);
  EXPECT_EQ(m.space().Count(), 4u);
}

TEST(GenTest, GaussianSumIsGeneratorBacked) {
  RunConfig gen;
  gen.command = "gen";
  gen.type = "gaussian_sum";
  gen.n = 500;
  gen.epsilon = 0.5;
  gen.delta = std::pow(2.0, -20);
  gen.output_path = TempPath("gauss.json");
  ASSERT_EQ(Invoke(gen).code, kExitOk);
  ASSERT_OK_AND_ASSIGN(std::string text, ReadFile(gen.output_path));
  EXPECT_THAT(text, HasSubstr("\"gaussian_sum\""));
  EXPECT_THAT(text, ::testing::Not(HasSubstr("\"matrix\"")));
  ASSERT_OK_AND_ASSIGN(Mechanism m, ParseMechanismJson(text));
  EXPECT_FALSE(m.is_dense());
}

TEST(GenTest, UnknownTypeIsInputError) {
  RunConfig gen;
  gen.command = "gen";
  gen.type = "exponential";
  gen.n = 2;
  Result r = Invoke(gen);
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("unknown --type"));
}

TEST(AnalyzeTest, CsvHasOneRowPerEpsilon) {
  RunConfig config;
  config.command = "analyze";
  config.mechanism_path = WriteRandomizedResponse(2, "rr2a.json");
  config.epsilons = {0.0, 0.5, 1.1};
  Result r = Invoke(config);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "epsilon,delta,worst_x,worst_y");
  EXPECT_THAT(r.err, HasSubstr("epsilon_max="));
}

TEST(AnalyzeTest, JsonOutputToFile) {
  RunConfig config;
  config.command = "analyze";
  config.mechanism_path = WriteRandomizedResponse(1, "rr1.json");
  config.format = "json";
  config.output_path = TempPath("analyze.json");
  Result r = Invoke(config);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("epsilon_max="));
  ASSERT_OK_AND_ASSIGN(std::string text, ReadFile(config.output_path));
  EXPECT_THAT(text, HasSubstr("\"epsilon_max\""));
}

TEST(AnalyzeTest, MalformedJsonExitsWithDiagnostics) {
  const std::string path = TempPath("broken.json");
  ASSERT_OK(WriteFile(path, "{\"domain\": [\"0\",\n \"1\"], \"n\": }"));
  RunConfig config;
  config.command = "analyze";
  config.mechanism_path = path;
  Result r = Invoke(config);
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, HasSubstr("line 2"));

  config.mechanism_path = TempPath("does_not_exist.json");
  EXPECT_EQ(Invoke(config).code, kExitInputError);
  config.mechanism_path = WriteRandomizedResponse(1, "rr1b.json");
  config.format = "xml";
  EXPECT_EQ(Invoke(config).code, kExitInputError);
}

TEST(SemanticTest, RealDatabaseWeighting) {
  RunConfig config;
  config.command = "semantic";
  config.mechanism_path = WriteRandomizedResponse(2, "rr2s.json");
  config.prior_path = WriteUniformPrior("prior_s.json");
  config.real_db = "1,0";
  config.format = "json";
  Result r = Invoke(config);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("\"weighting\": \"real_db\""));
  config.real_db.reset();
  r = Invoke(config);
  EXPECT_THAT(r.out, HasSubstr("\"weighting\": \"prior_mixture\""));
}

TEST(SemanticTest, CsvHeaderAndRows) {
  RunConfig config;
  config.command = "semantic";
  config.mechanism_path = WriteRandomizedResponse(2, "rr2c.json");
  config.prior_path = WriteUniformPrior("prior_c.json");
  Result r = Invoke(config);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = Lines(r.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines[0],
            "transcript,game_index,sd,transcript_prob_game0,"
            "transcript_prob_real_db");
  EXPECT_EQ(lines.size(), 1u + 4 * 2);
  EXPECT_THAT(r.err, HasSubstr("epsilon_star=0.25"));
}

TEST(SemanticTest, BadRealDatabase) {
  RunConfig config;
  config.command = "semantic";
  config.mechanism_path = WriteRandomizedResponse(2, "rr2d.json");
  config.prior_path = WriteUniformPrior("prior_d.json");
  config.real_db = "1,0,1";
  Result r = Invoke(config);
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_THAT(r.err, ::testing::Not(HasSubstr("--prior")));
}

TEST(CounterexampleTest, CsvHeaderAndDeterminism) {
  RunConfig config;
  config.command = "counterexample";
  config.n = 50;
  Result a = Invoke(config);
  Result b = Invoke(config);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_THAT(a.out, StartsWith("transcript,ratio,posterior_x0,sd_game1\n"));
  EXPECT_EQ(a.out, b.out);
  EXPECT_THAT(a.err, HasSubstr("game1_uniform=1"));
  config.log_base = "0.5";
  EXPECT_EQ(Invoke(config).code, kExitInputError);
}

TEST(VerifyTest, DeterministicAndUnknownSuite) {
  RunConfig config;
  config.command = "verify";
  config.suite = "theorems";
  config.trials = 20;
  Result a = Invoke(config);
  Result b = Invoke(config);
  EXPECT_EQ(a.code, kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  for (const std::string& line : Lines(a.out)) {
    EXPECT_THAT(line, StartsWith("PASS "));
  }
  config.suite = "lemmas";
  EXPECT_EQ(Invoke(config).code, kExitInputError);
}

TEST(RunCommandTest, UnknownCommand) {
  RunConfig config;
  config.command = "frobnicate";
  EXPECT_EQ(Invoke(config).code, kExitInputError);
}

}  // namespace
}  // namespace semdp
