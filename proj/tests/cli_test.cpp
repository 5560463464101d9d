// Copyright 2026 The votepriv Authors
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
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef VOTEPRIV_CLI_PATH
#error "VOTEPRIV_CLI_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(VOTEPRIV_CLI_PATH) + " " + args);
}

TEST(CliTest, DeterministicCsvWithStableSchema) {
  const std::string args =
      "delta --rule plurality --observable winner --m 3 --dist uniform "
      "--n 3..8 --jobs 2";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  ASSERT_EQ(first.exit_code, 0) << first.output;
  EXPECT_EQ(first.output, second.output);
  EXPECT_EQ(first.output.substr(0, first.output.find('\n')),
            "n,rule,observable,eps_ratio,delta_num,delta_den,delta_float,x,"
            "xprime");
  // One row per n.
  int lines = 0;
  for (char ch : first.output) lines += ch == '\n';
  EXPECT_EQ(lines, 7);
}

TEST(CliTest, EnginesAgreeByteForByte) {
  const std::string base =
      "delta --rule majority --alpha 1/2 --m 2 --dist 1/2,1/2 --n 1..7";
  const RunResult exact = run_cli(base + " --engine exact");
  const RunResult oracle = run_cli(base + " --engine oracle");
  const RunResult trails = run_cli(base + " --engine trails");
  ASSERT_EQ(exact.exit_code, 0) << exact.output;
  ASSERT_EQ(oracle.exit_code, 0);
  ASSERT_EQ(trails.exit_code, 0);
  EXPECT_EQ(exact.output, oracle.output);
  EXPECT_EQ(exact.output, trails.output);
  EXPECT_NE(exact.output.find("3,majority:1/2,winner,1/1,1,2,0.5,1,2"),
            std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli("delta --rule bogus --m 3 --n 3..4").exit_code, 2);
  EXPECT_EQ(run_cli("delta --rule plurality --m 3 --dist 1/2,1/2 --n 3..4")
                .exit_code,
            2);
  EXPECT_EQ(run_cli("delta --rule plurality --m 3 --n 3..4 --eps-ratio 1/2")
                .exit_code,
            2);
  EXPECT_EQ(run_cli("check nosuchsuite").exit_code, 2);
  EXPECT_EQ(run_cli("check geom").exit_code, 0);
  // 2^30 databases exceed the oracle guard.
  EXPECT_EQ(run_cli("delta --observable histogram --dist 1/2,1/2 --n 30..30 "
                    "--engine oracle")
                .exit_code,
            3);
  EXPECT_EQ(run_cli("delta --rule majority --alpha 1/2 --dist 1/2,1/2 "
                    "--n 3..3 --engine trails --eps-ratio 2")
                .exit_code,
            2);
}

TEST(CliTest, FitPipeline) {
  const RunResult sweep = run_cli(
      "delta --rule majority --alpha 1/2 --m 2 --dist 1/2,1/2 --n 3..30");
  ASSERT_EQ(sweep.exit_code, 0);
  const std::string csv_path = ::testing::TempDir() + "votepriv_fit_input.csv";
  {
    std::ofstream out(csv_path);
    out << sweep.output;
  }
  const RunResult fit = run_cli("fit --input " + csv_path + " --n-min 3 --n-max 30");
  ASSERT_EQ(fit.exit_code, 0) << fit.output;
  EXPECT_NE(fit.output.find("\"rule\": \"majority:1/2\""), std::string::npos);
  EXPECT_NE(fit.output.find("\"definition\": \"conditional-pair\""),
            std::string::npos);
  // The fair-majority series follows 1/sqrt(a n + b) with a near pi/2.
  const auto a_pos = fit.output.find("\"a\": ");
  ASSERT_NE(a_pos, std::string::npos);
  const double a = std::stod(fit.output.substr(a_pos + 5));
  EXPECT_GT(a, 1.3);
  EXPECT_LT(a, 1.9);

  EXPECT_EQ(run_cli("fit --input /nonexistent.csv").exit_code, 2);
}

TEST(CliTest, FitTableRendersRuleByObservableGrid) {
  const std::string dir = ::testing::TempDir();
  const std::string winner_csv = dir + "votepriv_tbl_w.csv";
  const std::string score_csv = dir + "votepriv_tbl_s.csv";
  {
    std::ofstream out(winner_csv);
    out << run_cli("delta --rule borda --observable winner --m 3 "
                   "--dist uniform --n 3..12")
               .output;
  }
  {
    std::ofstream out(score_csv);
    out << run_cli("delta --rule borda --observable score --m 3 "
                   "--dist uniform --n 3..12")
               .output;
  }
  const RunResult table = run_cli("fit --input " + winner_csv + " --input " +
                                  score_csv + " --n-min 3 --n-max 12 --table");
  ASSERT_EQ(table.exit_code, 0) << table.output;
  EXPECT_NE(table.output.find("winner"), std::string::npos);
  EXPECT_NE(table.output.find("score"), std::string::npos);
  EXPECT_NE(table.output.find("borda"), std::string::npos);
  EXPECT_NE(table.output.find("1/sqrt("), std::string::npos);
}

TEST(CliTest, JobsEnvFallbackKeepsBytesIdentical) {
  const std::string args =
      "delta --rule borda --observable winner --m 3 --dist uniform --n 3..7";
  const RunResult serial = run_shell(std::string("VOTEPRIV_JOBS=1 ") +
                                     VOTEPRIV_CLI_PATH + " " + args);
  const RunResult parallel = run_cli(args + " --jobs 2");
  ASSERT_EQ(serial.exit_code, 0);
  EXPECT_EQ(serial.output, parallel.output);
}

TEST(CliTest, GeomEmitsExactRatioAndUtility) {
  const RunResult geom = run_cli("geom --alpha 1/3 --n 5 --gamma 1/10");
  ASSERT_EQ(geom.exit_code, 0);
  EXPECT_NE(geom.output.find("ratio 3/1"), std::string::npos);
  EXPECT_NE(geom.output.find("utility -"), std::string::npos);
  const RunResult matrix = run_cli("geom --alpha 1/2 --n 1 --print-matrix");
  EXPECT_NE(matrix.output.find("2/3 1/3"), std::string::npos);
}

}  // namespace
