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
#include "votepriv/hyperplane.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "testutil.hpp"
#include "votepriv/closed_form.hpp"
#include "votepriv/orders.hpp"

namespace votepriv {
namespace {

using testutil::Q;

TEST(ScoringHyperplanesTest, PluralityAndBorda) {
  const auto plurality2 = scoring_hyperplanes({Q("1"), Q("0")}, 2);
  ASSERT_EQ(plurality2.size(), 1u);
  EXPECT_EQ(plurality2[0], (Hyperplane{Q("1"), Q("-1")}));

  const auto borda3 = scoring_hyperplanes({Q("2"), Q("1"), Q("0")}, 3);
  ASSERT_EQ(borda3.size(), 3u);
  for (const Hyperplane& h : borda3) {
    Rational ones = 0;
    for (const Rational& v : h) {
      ones += v;
      EXPECT_GE(v, Q("-2"));
      EXPECT_LE(v, Q("2"));
    }
    EXPECT_EQ(ones, Q("0"));
  }
}

TEST(DistTest, UniformOnEveryScoringPlane) {
  for (int m : {2, 3}) {
    const VoteDistribution uniform = VoteDistribution::uniform(num_orders(m));
    std::vector<Rational> borda;
    for (int i = m - 1; i >= 0; --i) borda.emplace_back(i);
    for (const Hyperplane& h : scoring_hyperplanes(borda, m)) {
      EXPECT_EQ(dist_to_hyperplane(uniform, h), 0.0);
    }
  }
}

TEST(DistTest, PointMassAndZeroPlane) {
  // A point mass on one order projects that order's score difference.
  std::vector<Rational> probs(6, Q("0"));
  probs[0] = 1;
  probs[1] = 0;  // keep at least two entries so the type accepts it
  std::vector<Rational> near_point(6, Q("0"));
  near_point[0] = Q("1");
  // VoteDistribution requires two supported values; use 1-eps concentration.
  std::vector<Rational> conc(6, Q("0"));
  conc[0] = Q("99/100");
  conc[1] = Q("1/100");
  const VoteDistribution pi(conc);
  const auto planes = scoring_hyperplanes({Q("2"), Q("1"), Q("0")}, 3);
  const Hyperplane& h = planes[0];
  Rational dot = 0;
  for (int i = 0; i < 6; ++i) dot += pi[i] * h[static_cast<std::size_t>(i)];
  double norm = 0;
  for (const Rational& v : h) norm += to_double(v) * to_double(v);
  EXPECT_NEAR(dist_to_hyperplane(pi, h), to_double(dot) / std::sqrt(norm), 1e-15);

  EXPECT_THROW(dist_to_hyperplane(pi, Hyperplane(6, Q("0"))),
               std::invalid_argument);
}

TEST(BoundTest, BranchSelection) {
  // On-hyperplane distribution: only the polynomial branch remains.
  const VoteDistribution uniform = VoteDistribution::uniform(2);
  const auto planes = scoring_hyperplanes({Q("1"), Q("0")}, 2);
  EXPECT_DOUBLE_EQ(gsr_exponential_bound(uniform, planes, 2, 400),
                   std::sqrt(1.0 / 400));

  // Off-hyperplane: exponential branch wins for large n and the empirical
  // decay rate of the majority delta matches the closed-form rate.
  const VoteDistribution biased({Q("3/5"), Q("2/5")});
  const double far = gsr_exponential_bound(biased, planes, 2, 300000);
  EXPECT_LT(far, std::sqrt(1.0 / 300000));

  const double rate = majority_rate(Q("1/2"), Q("3/5"));
  const double empirical =
      std::log(to_double(majority_delta_exact(Q("1/2"), Q("3/5"), 400) /
                         majority_delta_exact(Q("1/2"), Q("3/5"), 200))) /
      200.0;
  EXPECT_NEAR(empirical, std::log(rate), 5e-3);

  EXPECT_THROW(
      gsr_exponential_bound(VoteDistribution({Q("1"), Q("0")}), planes, 2, 10),
      std::invalid_argument);
}

}  // namespace
}  // namespace votepriv
