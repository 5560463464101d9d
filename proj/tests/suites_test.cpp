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
#include "votepriv/suites.hpp"

#include <gtest/gtest.h>

namespace votepriv {
namespace {

TEST(SuitesTest, AllSuitesPassOnReducedSizes) {
  SuiteOptions options;
  options.seed = 20240809;
  options.cases = 60;
  options.n_max = 4;
  for (const std::string& name : suite_names()) {
    const SuiteReport report = run_suite(name, options);
    EXPECT_TRUE(report.pass()) << report.summary()
                               << (report.failures.empty()
                                       ? ""
                                       : "\n  first: " + report.failures.front());
    EXPECT_GT(report.cases_run, 0) << name;
  }
  EXPECT_THROW(run_suite("nope", options), std::invalid_argument);
}

TEST(SuitesTest, DeterministicReports) {
  SuiteOptions options;
  options.seed = 7;
  options.cases = 40;
  const SuiteReport a = run_suite("trails", options);
  const SuiteReport b = run_suite("trails", options);
  EXPECT_EQ(a.summary(), b.summary());
  EXPECT_EQ(a.cases_run, b.cases_run);
}

}  // namespace
}  // namespace votepriv
