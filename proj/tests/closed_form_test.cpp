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
#include "votepriv/closed_form.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "testutil.hpp"
#include "votepriv/delta.hpp"

namespace votepriv {
namespace {

using testutil::Q;

TEST(Hist2ClosedFormTest, FrozenValuesAndBoundary) {
  EXPECT_EQ(hist2_delta_closed_form(Q("1/2"), 3), Q("1/2"));
  EXPECT_EQ(hist2_delta_closed_form(Q("1/2"), 5), Q("3/8"));
  // Integer p*n: the maximizing set keeps strictly i > pn, so the exit sits
  // one unit above the mean.
  EXPECT_EQ(hist2_delta_closed_form(Q("1/3"), 6), Q("80/243"));
  EXPECT_EQ(hist2_delta_closed_form(Q("1/2"), 1), Q("1"));
  EXPECT_THROW(hist2_delta_closed_form(Q("0"), 5), std::invalid_argument);
  EXPECT_THROW(hist2_delta_closed_form(Q("1"), 5), std::invalid_argument);
}

TEST(Hist2ClosedFormTest, MatchesDeltaExact) {
  testutil::TestRng rng(79);
  for (int i = 0; i < 60; ++i) {
    const int n = rng.range(1, 40);
    const int den = rng.range(2, 19);
    const Rational p = make_rational(rng.range(1, den - 1), den);
    HistogramIdentityMechanism mech(n, 2);
    EXPECT_EQ(hist2_delta_closed_form(p, n),
              delta_exact(mech, VoteDistribution({p, 1 - p}), Q("1")).delta)
        << "p=" << to_fraction_string(p) << " n=" << n;
  }
}

TEST(MajorityClosedFormTest, FrozenValuesAndDegenerateAlphas) {
  EXPECT_EQ(majority_delta_exact(Q("1/2"), Q("1/2"), 3), Q("1/2"));
  // alpha = 1: only the unanimous histogram elects the first value.
  for (int n : {1, 2, 5, 9}) {
    EXPECT_EQ(majority_delta_exact(Q("1"), Q("1/2"), n),
              make_rational(1, pow_int(2, static_cast<unsigned long>(n - 1))));
  }
  // alpha = 0: the rule is constant, nothing is revealed.
  EXPECT_EQ(majority_delta_exact(Q("0"), Q("1/3"), 7), Q("0"));
  EXPECT_THROW(majority_delta_exact(Q("2"), Q("1/2"), 3), std::invalid_argument);
}

TEST(MajorityClosedFormTest, MatchesDeltaExact) {
  testutil::TestRng rng(83);
  for (int i = 0; i < 60; ++i) {
    const int n = rng.range(1, 40);
    const int aden = rng.range(1, 12);
    const Rational alpha = make_rational(rng.range(0, aden), aden);
    const int pden = rng.range(2, 15);
    const Rational p = make_rational(rng.range(1, pden - 1), pden);
    AlphaMajorityMechanism mech(n, alpha);
    EXPECT_EQ(majority_delta_exact(alpha, p, n),
              delta_exact(mech, VoteDistribution({p, 1 - p}), Q("1")).delta)
        << "alpha=" << to_fraction_string(alpha)
        << " p=" << to_fraction_string(p) << " n=" << n;
  }
}

TEST(MajorityRateTest, EqualityExactlyAtAlphaEqualsP) {
  EXPECT_DOUBLE_EQ(majority_rate(Q("1/3"), Q("1/3")), 1.0);
  EXPECT_DOUBLE_EQ(majority_rate(Q("1/2"), Q("1/2")), 1.0);
  EXPECT_NEAR(std::log(majority_rate(Q("3/5"), Q("1/2"))), -0.020136, 1e-6);

  testutil::TestRng rng(89);
  for (int i = 0; i < 50; ++i) {
    const Rational alpha = make_rational(rng.range(1, 9), 10);
    const Rational p = make_rational(rng.range(1, 11), 12);
    const double rate = majority_rate(alpha, p);
    EXPECT_LE(rate, 1.0 + 1e-15);
    if (alpha != p) EXPECT_LT(rate, 1.0);
  }
  EXPECT_THROW(majority_rate(Q("0"), Q("1/2")), std::invalid_argument);
  EXPECT_THROW(majority_rate(Q("1"), Q("1/2")), std::invalid_argument);
}

TEST(MixtureTest, MatchesPairRestrictedDeltaExact) {
  testutil::TestRng rng(97);
  for (int i = 0; i < 25; ++i) {
    const int c = rng.range(3, 4);
    const int n = rng.range(1, 12);
    const VoteDistribution pi = rng.distribution(c, true);
    const int j = rng.below(c);
    int k = rng.below(c - 1);
    if (k >= j) ++k;
    HistogramIdentityMechanism mech(n, c);
    EXPECT_EQ(histc_delta_mixture(pi, n, j, k),
              delta_exact_pair(mech, pi, Q("1"), j, k).delta)
        << "pi=" << pi.to_string() << " n=" << n << " j=" << j << " k=" << k;
  }
}

TEST(MixtureTest, DegenerateAndTwoBinCases) {
  // c = 2 reduces to the two-bin closed form.
  for (int n : {1, 4, 9}) {
    const VoteDistribution pi({Q("2/7"), Q("5/7")});
    EXPECT_EQ(histc_delta_mixture(pi, n, 0, 1),
              hist2_delta_closed_form(Q("2/7"), n));
  }
  // All mass on the pair concentrates the mixing binomial on s = n.
  const VoteDistribution on_pair({Q("1/3"), Q("2/3"), Q("0")});
  EXPECT_EQ(histc_delta_mixture(on_pair, 6, 0, 1),
            hist2_delta_closed_form(Q("1/3"), 6));
  // A zero-probability pair member is fully revealing.
  EXPECT_EQ(histc_delta_mixture(on_pair, 6, 0, 2), Q("1"));
  HistogramIdentityMechanism mech(6, 3);
  EXPECT_EQ(delta_exact_pair(mech, on_pair, Q("1"), 0, 2).delta, Q("1"));
}

}  // namespace
}  // namespace votepriv
