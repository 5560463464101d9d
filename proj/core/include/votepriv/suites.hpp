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
#ifndef VOTEPRIV_SUITES_HPP_
#define VOTEPRIV_SUITES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace votepriv {

// Randomized invariant suites shared by the `check` CLI subcommand and the
// test binaries. All randomness flows from the seed, so identical options
// give identical runs and byte-identical reports.
struct SuiteOptions {
  std::uint64_t seed = 42;
  int cases = 0;  // 0 = suite default
  int n_max = 0;  // 0 = suite default (oracle equivalence sizes)
};

struct SuiteReport {
  std::string name;
  int cases_run = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  std::string summary() const;
};

// Exactness of the telescoping trail identity on randomized trails, plus
// the soundness of the trail partitioning (union, disjointness, maximality).
SuiteReport run_trails_suite(const SuiteOptions& options);

// delta_exact == delta_bruteforce_db exactly: histogram identity, biased
// majority, and the five m = 3 rules with winner and score observables.
SuiteReport run_oracle_suite(const SuiteOptions& options);

// delta(f o M) <= delta(M) at ratio 1 for randomized output maps.
SuiteReport run_postprocess_suite(const SuiteOptions& options);

// The simulation-based/conditional-pair delta relations at matched ratios.
SuiteReport run_lemma1_suite(const SuiteOptions& options);

// Truncated geometric mechanism: exact ratio 1/alpha, stochastic rows,
// utility strictly improving as alpha shrinks.
SuiteReport run_geom_suite(const SuiteOptions& options);

// Hyperplane distances and decay-rate comparisons.
SuiteReport run_bounds_suite(const SuiteOptions& options);

// Dispatch by suite name: trails|oracle|postprocess|lemma1|geom|bounds.
// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::vector<std::string> suite_names();

}  // namespace votepriv

#endif  // VOTEPRIV_SUITES_HPP_
