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
#include <benchmark/benchmark.h>

#include "votepriv/closed_form.hpp"
#include "votepriv/delta.hpp"
#include "votepriv/prob.hpp"
#include "votepriv/trail.hpp"

namespace votepriv {
namespace {

void BM_EnumerateHistograms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for (HistogramEnumerator it(n, 6); !it.done(); it.advance()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() *
                          histogram_count(n, 6).get_si());
}
BENCHMARK(BM_EnumerateHistograms)->Arg(20)->Arg(35);

void BM_MultinomialPmf(benchmark::State& state) {
  const VoteDistribution pi({parse_rational("1/6"), parse_rational("1/3"),
                             parse_rational("1/2")});
  const Histogram t{14, 9, 7};
  ensure_factorials(30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multinomial_pmf(t, pi));
  }
}
BENCHMARK(BM_MultinomialPmf);

void BM_DeltaHistogramIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VoteDistribution pi({parse_rational("1/2"), parse_rational("1/4"),
                             parse_rational("1/4")});
  for (auto _ : state) {
    HistogramIdentityMechanism mech(n, 3);
    benchmark::DoNotOptimize(delta_exact(mech, pi, Rational(1)).delta);
  }
}
BENCHMARK(BM_DeltaHistogramIdentity)->Arg(25)->Arg(60);

void BM_DeltaPluralityWinner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GsrRule rule = GsrRule::plurality(3);
  const VoteDistribution uniform = VoteDistribution::uniform(6);
  for (auto _ : state) {
    GsrWinnerMechanism mech(n, rule);
    benchmark::DoNotOptimize(delta_exact(mech, uniform, Rational(1)).delta);
  }
  state.SetItemsProcessed(state.iterations() *
                          histogram_count(n, 6).get_si());
}
BENCHMARK(BM_DeltaPluralityWinner)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_DeltaStvScore(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GsrRule rule = GsrRule::stv(3);
  const VoteDistribution uniform = VoteDistribution::uniform(6);
  for (auto _ : state) {
    GsrScoreMechanism mech(n, rule);
    benchmark::DoNotOptimize(delta_exact(mech, uniform, Rational(1)).delta);
  }
  state.SetItemsProcessed(state.iterations() *
                          histogram_count(n, 6).get_si());
}
BENCHMARK(BM_DeltaStvScore)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_TrailPartition(benchmark::State& state) {
  const auto universe = all_histograms(24, 4);
  std::vector<Histogram> subset;
  for (std::size_t i = 0; i < universe.size(); i += 2) subset.push_back(universe[i]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_into_trails(subset, Direction{0, 2}));
  }
}
BENCHMARK(BM_TrailPartition);

void BM_MajorityClosedForm(benchmark::State& state) {
  const Rational alpha = parse_rational("3/5");
  const Rational p = parse_rational("1/2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(majority_delta_exact(alpha, p, 801));
  }
}
BENCHMARK(BM_MajorityClosedForm);

}  // namespace
}  // namespace votepriv

BENCHMARK_MAIN();
