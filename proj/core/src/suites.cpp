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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "votepriv/closed_form.hpp"
#include "votepriv/delta.hpp"
#include "votepriv/geometric.hpp"
#include "votepriv/hyperplane.hpp"
#include "votepriv/mechanism.hpp"
#include "votepriv/trail.hpp"

namespace votepriv {

namespace {

// splitmix64: tiny, stable across platforms, good enough for test-case
// generation (we are generating cases, not statistics).
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [0, bound).
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // Random exact distribution over c values from small integer weights.
  // Always has >= 2 supported values; zero weights appear unless
  // all_positive is set.
  VoteDistribution distribution(int c, bool all_positive) {
    while (true) {
      std::vector<int> weights(static_cast<std::size_t>(c));
      int total = 0;
      int positive = 0;
      for (int i = 0; i < c; ++i) {
        const int lo = all_positive ? 1 : 0;
        weights[static_cast<std::size_t>(i)] = range(lo, 12);
        total += weights[static_cast<std::size_t>(i)];
        if (weights[static_cast<std::size_t>(i)] > 0) ++positive;
      }
      if (positive < 2) continue;
      std::vector<Rational> probs;
      probs.reserve(static_cast<std::size_t>(c));
      for (int w : weights) probs.push_back(make_rational(w, total));
      return VoteDistribution(std::move(probs));
    }
  }

  // Probability strictly inside (0, 1).
  Rational interior_prob() {
    const int den = range(2, 24);
    const int num = range(1, den - 1);
    return make_rational(num, den);
  }

  Histogram histogram(int n, int c) {
    Histogram t;
    t.counts.assign(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < n; ++i) ++t[below(c)];
    return t;
  }
};

std::string describe_case(const std::string& what, const std::string& detail) {
  return what + ": " + detail;
}

}  // namespace

std::string SuiteReport::summary() const {
  std::string out = name + ": " + (pass() ? "pass" : "FAIL") + " (" +
                    std::to_string(cases_run) + " cases";
  if (!pass()) out += ", " + std::to_string(failures.size()) + " failures";
  out += ")";
  return out;
}

SuiteReport run_trails_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "trails";
  const int cases = options.cases > 0 ? options.cases : 1000;
  Rng rng(options.seed);

  for (int i = 0; i < cases; ++i) {
    const int c = rng.range(2, 4);
    const int n = rng.range(1, 12);
    const VoteDistribution pi = rng.distribution(c, rng.below(4) != 0);

    // Random valid trail: entry[j] bounds the length.
    const int j = rng.below(c);
    int k = rng.below(c - 1);
    if (k >= j) ++k;
    Histogram entry = rng.histogram(n, c);
    const int q = entry[j] > 0 ? rng.range(0, entry[j]) : 0;
    Trail trail{entry, Direction{j, k}, q};

    const auto [lhs, rhs] = trail_theorem_sides(trail, pi);
    if (lhs != rhs) {
      report.failures.push_back(describe_case(
          "trail identity violated",
          "entry=" + entry.to_string() + " j=" + std::to_string(j + 1) +
              " k=" + std::to_string(k + 1) + " q=" + std::to_string(q) +
              " pi=" + pi.to_string() + " lhs=" + to_fraction_string(lhs) +
              " rhs=" + to_fraction_string(rhs) +
              " diff=" + to_fraction_string(lhs - rhs)));
    }

    // Partition soundness on a random subset of the histogram universe.
    if (i % 4 == 0) {
      std::vector<Histogram> subset;
      for (const Histogram& h : all_histograms(rng.range(1, 8), c)) {
        if (rng.below(2) == 0) subset.push_back(h);
      }
      const auto trails = partition_into_trails(subset, Direction{j, k});
      std::set<Histogram> seen;
      std::set<Histogram> input(subset.begin(), subset.end());
      for (const Trail& t : trails) {
        for (const Histogram& point : t.points()) {
          if (!input.count(point)) {
            report.failures.push_back(
                describe_case("partition emitted non-member",
                              point.to_string()));
          }
          if (!seen.insert(point).second) {
            report.failures.push_back(describe_case(
                "partition trails overlap", point.to_string()));
          }
        }
        Histogram before = t.entry;
        ++before[j];
        if (before[k] > 0) {
          --before[k];
          if (input.count(before)) {
            report.failures.push_back(describe_case(
                "trail not maximal at entry", t.entry.to_string()));
          }
        }
        Histogram after = t.exit();
        if (after[j] > 0) {
          --after[j];
          ++after[k];
          if (input.count(after)) {
            report.failures.push_back(describe_case(
                "trail not maximal at exit", t.exit().to_string()));
          }
        }
      }
      if (seen.size() != input.size()) {
        report.failures.push_back("partition union misses members");
      }
    }
    ++report.cases_run;
  }
  return report;
}

namespace {

// Compares the grid engine against the database-enumeration oracle on one
// mechanism; both run over the same mechanism instance so output ids align.
void check_oracle_case(Mechanism& mech, const VoteDistribution& pi,
                       const Rational& ratio, const std::string& what,
                       SuiteReport& report) {
  const DeltaResult fast = delta_exact(mech, pi, ratio);
  const DeltaResult slow = delta_bruteforce_db(mech, pi, ratio);
  if (fast.delta != slow.delta || fast.x != slow.x ||
      fast.xprime != slow.xprime || fast.witness != slow.witness) {
    report.failures.push_back(describe_case(
        "oracle mismatch",
        what + " exact=" + to_fraction_string(fast.delta) + " oracle=" +
            to_fraction_string(slow.delta) + " pair=(" +
            std::to_string(fast.x + 1) + "," + std::to_string(fast.xprime + 1) +
            ")/(" + std::to_string(slow.x + 1) + "," +
            std::to_string(slow.xprime + 1) + ")"));
  }
  ++report.cases_run;
}

}  // namespace

SuiteReport run_oracle_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "oracle";
  const int n_max = options.n_max > 0 ? options.n_max : 6;
  Rng rng(options.seed);

  // Histogram identity, c = 2 and 3.
  for (int c = 2; c <= 3; ++c) {
    for (int n = 1; n <= n_max; ++n) {
      const VoteDistribution pi = rng.distribution(c, rng.below(3) != 0);
      HistogramIdentityMechanism mech(n, c);
      check_oracle_case(mech, pi, Rational(1),
                        "identity c=" + std::to_string(c) +
                            " n=" + std::to_string(n) + " pi=" + pi.to_string(),
                        report);
    }
  }

  // Biased majority with random alpha, including the boundary conventions.
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Rational> alphas = {
        make_rational(1, 2), make_rational(rng.range(0, n), std::max(1, n)),
        rng.interior_prob()};
    for (const Rational& alpha : alphas) {
      const VoteDistribution pi = rng.distribution(2, true);
      AlphaMajorityMechanism mech(n, alpha);
      check_oracle_case(mech, pi, Rational(1),
                        "majority alpha=" + to_fraction_string(alpha) +
                            " n=" + std::to_string(n) + " pi=" + pi.to_string(),
                        report);
    }
  }

  // The five concrete rules at m = 3, winner and score observables.
  const int m = 3;
  const int rule_n_max = std::min(n_max, 6);
  const std::vector<GsrRule> rules = {GsrRule::plurality(m), GsrRule::borda(m),
                                      GsrRule::k_approval(2, m),
                                      GsrRule::maximin(m), GsrRule::stv(m)};
  for (const GsrRule& rule : rules) {
    for (int n = 1; n <= rule_n_max; ++n) {
      const VoteDistribution pi =
          rng.below(2) == 0 ? VoteDistribution::uniform(rule.order_count())
                            : rng.distribution(rule.order_count(), true);
      GsrWinnerMechanism winner(n, rule);
      check_oracle_case(winner, pi, Rational(1),
                        rule.name() + " winner n=" + std::to_string(n), report);
      GsrScoreMechanism score(n, rule);
      check_oracle_case(score, pi, Rational(1),
                        rule.name() + " score n=" + std::to_string(n), report);
    }
  }
  return report;
}

SuiteReport run_postprocess_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "postprocess";
  const int cases = options.cases > 0 ? options.cases : 200;
  Rng rng(options.seed);

  for (int i = 0; i < cases; ++i) {
    const int c = rng.range(2, 3);
    const int n = rng.range(1, 5);
    const VoteDistribution pi = rng.distribution(c, true);

    // Deterministic pseudo-random labeling over a small alphabet.
    const std::uint64_t case_salt = rng.next();
    const int alphabet = rng.range(2, 5);
    auto base = std::make_shared<FunctionMechanism>(
        n, c, [case_salt, alphabet](const Histogram& t) {
          std::uint64_t h = case_salt;
          for (int v : t.counts) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull +
                 (h << 6) + (h >> 2);
          }
          return std::string(1, static_cast<char>('A' + h % static_cast<std::uint64_t>(alphabet)));
        });

    // Random relabeling into a smaller alphabet.
    std::map<std::string, std::string> f;
    for (int a = 0; a < alphabet; ++a) {
      f[std::string(1, static_cast<char>('A' + a))] =
          std::string(1, static_cast<char>('a' + rng.below(std::max(1, alphabet - 1))));
    }
    auto composed = postprocess(base, f);

    const Rational base_delta = delta_exact(*base, pi, Rational(1)).delta;
    const Rational post_delta = delta_exact(*composed, pi, Rational(1)).delta;
    if (post_delta > base_delta) {
      report.failures.push_back(describe_case(
          "post-processing increased delta",
          "n=" + std::to_string(n) + " c=" + std::to_string(c) + " base=" +
              to_fraction_string(base_delta) + " post=" +
              to_fraction_string(post_delta)));
    }
    ++report.cases_run;
  }
  return report;
}

SuiteReport run_lemma1_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "lemma1";
  const int cases = options.cases > 0 ? options.cases : 100;
  Rng rng(options.seed);

  for (int i = 0; i < cases; ++i) {
    const int c = rng.range(2, 3);
    const int n = rng.range(1, 6);
    const VoteDistribution pi = rng.distribution(c, true);
    const Rational r = 1 + make_rational(rng.range(0, 8), rng.range(2, 9));

    HistogramIdentityMechanism identity(n, c);
    AlphaMajorityMechanism majority(n, rng.interior_prob());
    Mechanism* mechs[] = {&identity, &majority};
    Mechanism& mech = *mechs[rng.below(c == 2 ? 2 : 1)];

    const Rational direct = delta_exact(mech, pi, r).delta;
    const Rational sim = simulator_ddp_min_delta(mech, pi, r);

    // A guess-and-run simulator meets the simulation-based definition with
    // the conditional-pair delta at the same ratio.
    if (sim > direct) {
      report.failures.push_back(describe_case(
          "simulator delta exceeded conditional-pair delta",
          "n=" + std::to_string(n) + " r=" + to_fraction_string(r) + " sim=" +
              to_fraction_string(sim) + " direct=" + to_fraction_string(direct)));
    }
    // Conversely a simulation-based (r, d) pair yields (r^2, (1+r) d).
    const Rational squared = delta_exact(mech, pi, r * r).delta;
    if (squared > (1 + r) * sim) {
      report.failures.push_back(describe_case(
          "round-trip bound violated",
          "n=" + std::to_string(n) + " r=" + to_fraction_string(r) +
              " delta(r^2)=" + to_fraction_string(squared) + " (1+r)sim=" +
              to_fraction_string((1 + r) * sim)));
    }
    ++report.cases_run;
  }
  return report;
}

SuiteReport run_geom_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "geom";
  (void)options;

  const std::vector<Rational> alphas = {make_rational(1, 2), make_rational(1, 3),
                                        make_rational(2, 5)};
  for (const Rational& alpha : alphas) {
    for (int n : {2, 5, 10}) {
      const auto mx = truncated_geometric(alpha, n);
      const Rational ratio = exact_dp_ratio(mx);
      if (ratio != 1 / alpha) {
        report.failures.push_back(describe_case(
            "exact ratio mismatch",
            "alpha=" + to_fraction_string(alpha) + " n=" + std::to_string(n) +
                " ratio=" + to_fraction_string(ratio)));
      }
      ++report.cases_run;
    }
  }

  // Utility strictly improves as alpha decreases (noise concentrates).
  const Rational gamma = make_rational(1, 10);
  const Rational u34 = utility(truncated_geometric(make_rational(3, 4), 5), gamma);
  const Rational u12 = utility(truncated_geometric(make_rational(1, 2), 5), gamma);
  const Rational u14 = utility(truncated_geometric(make_rational(1, 4), 5), gamma);
  if (!(u34 < u12 && u12 < u14)) {
    report.failures.push_back(describe_case(
        "utility not strictly increasing as alpha decreases",
        to_fraction_string(u34) + " vs " + to_fraction_string(u12) + " vs " +
            to_fraction_string(u14)));
  }
  ++report.cases_run;
  return report;
}

SuiteReport run_bounds_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "bounds";
  (void)options;

  // Uniform votes lie on every positional decision hyperplane.
  for (int m : {2, 3}) {
    const VoteDistribution uniform = VoteDistribution::uniform(num_orders(m));
    std::vector<std::vector<Rational>> vectors;
    vectors.push_back([&] {
      std::vector<Rational> s(static_cast<std::size_t>(m), Rational(0));
      s[0] = 1;
      return s;
    }());
    if (m == 3) {
      vectors.push_back({Rational(2), Rational(1), Rational(0)});
      vectors.push_back({Rational(1), Rational(1), Rational(0)});
    }
    for (const auto& s : vectors) {
      for (const Hyperplane& h : scoring_hyperplanes(s, m)) {
        Rational dot = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
          dot += uniform[static_cast<int>(i)] * h[i];
        }
        if (dot != 0 || dist_to_hyperplane(uniform, h) != 0.0) {
          report.failures.push_back("uniform distribution off a scoring hyperplane");
        }
        Rational ones = 0;
        for (const Rational& v : h) ones += v;
        if (ones != 0) {
          report.failures.push_back("scoring hyperplane misses the ones vector");
        }
        ++report.cases_run;
      }
    }
  }

  // Off-hyperplane distribution: the bound switches to its exponential
  // branch once n is large.
  {
    std::vector<Rational> p = {make_rational(3, 5), make_rational(2, 5)};
    const VoteDistribution biased{p};
    std::vector<Rational> plurality2 = {Rational(1), Rational(0)};
    const auto planes = scoring_hyperplanes(plurality2, 2);
    const double d = dist_to_hyperplane(biased, planes.front());
    if (!(d > 0)) report.failures.push_back("biased distribution has zero distance");
    const double bound_small = gsr_exponential_bound(biased, planes, 2, 100);
    const double bound_large = gsr_exponential_bound(biased, planes, 2, 200000);
    if (!(bound_small <= std::sqrt(1.0 / 100) + 1e-15)) {
      report.failures.push_back("bound exceeds its polynomial branch");
    }
    if (!(bound_large < std::sqrt(1.0 / 200000) / 10)) {
      report.failures.push_back("bound failed to enter the exponential branch");
    }
    report.cases_run += 2;
  }

  // Exponential vs polynomial decay of the majority delta, via the exact
  // closed form: at p != 1/2 the halving ratio collapses, at p = 1/2 it
  // hugs 1/sqrt(2).
  {
    const Rational half = make_rational(1, 2);
    for (int n : {50, 100}) {
      const double biased_ratio =
          to_double(majority_delta_exact(half, make_rational(3, 5), 2 * n) /
                    majority_delta_exact(half, make_rational(3, 5), n));
      const double fair_ratio =
          to_double(majority_delta_exact(half, half, 2 * n) /
                    majority_delta_exact(half, half, n));
      if (!(biased_ratio < 0.7)) {
        report.failures.push_back("biased majority not decaying exponentially");
      }
      if (!(fair_ratio > 0.65 && fair_ratio < 0.75)) {
        report.failures.push_back("fair majority left the 1/sqrt(2) band");
      }
      report.cases_run += 2;
    }
  }
  return report;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "trails") return run_trails_suite(options);
  if (name == "oracle") return run_oracle_suite(options);
  if (name == "postprocess") return run_postprocess_suite(options);
  if (name == "lemma1") return run_lemma1_suite(options);
  if (name == "geom") return run_geom_suite(options);
  if (name == "bounds") return run_bounds_suite(options);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"trails", "oracle", "postprocess", "lemma1", "geom", "bounds"};
}

}  // namespace votepriv
