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
#include "votepriv/geometric.hpp"

#include <gtest/gtest.h>

#include "testutil.hpp"

namespace votepriv {
namespace {

using testutil::Q;

TEST(TruncatedGeometricTest, SmallMatrixAndRowSums) {
  const auto mx = truncated_geometric(Q("1/2"), 1);
  EXPECT_EQ(mx.at(0, 0), Q("2/3"));
  EXPECT_EQ(mx.at(0, 1), Q("1/3"));
  EXPECT_EQ(mx.at(1, 0), Q("1/3"));
  EXPECT_EQ(mx.at(1, 1), Q("2/3"));

  // Row-stochasticity is enforced by the type; spot-check the arithmetic.
  const auto big = truncated_geometric(Q("1/3"), 6);
  for (int i = 0; i <= 6; ++i) {
    Rational sum = 0;
    for (int r = 0; r <= 6; ++r) sum += big.at(i, r);
    EXPECT_EQ(sum, Q("1"));
  }

  EXPECT_THROW(truncated_geometric(Q("0"), 4), std::invalid_argument);
  EXPECT_THROW(truncated_geometric(Q("1"), 4), std::invalid_argument);
}

TEST(ExactDpRatioTest, GeometricAndDegenerateMatrices) {
  for (const Rational& alpha : {Q("1/2"), Q("1/3"), Q("2/5")}) {
    for (int n : {2, 5, 10}) {
      EXPECT_EQ(exact_dp_ratio(truncated_geometric(alpha, n)), 1 / alpha);
    }
  }

  // Uniform rows leak nothing: ratio 1, epsilon 0.
  const FiniteMechanismMatrix uniform(
      {{Q("1/3"), Q("1/3"), Q("1/3")},
       {Q("1/3"), Q("1/3"), Q("1/3")},
       {Q("1/3"), Q("1/3"), Q("1/3")}});
  EXPECT_EQ(exact_dp_ratio(uniform), Q("1"));

  // A zero opposite a positive entry has unbounded epsilon.
  const FiniteMechanismMatrix identity(
      {{Q("1"), Q("0")}, {Q("0"), Q("1")}});
  EXPECT_THROW(exact_dp_ratio(identity), std::domain_error);

  EXPECT_THROW(FiniteMechanismMatrix({{Q("1/2"), Q("1/4")},
                                      {Q("1/2"), Q("1/2")}}),
               std::invalid_argument);
}

TEST(UtilityTest, LossAccounting) {
  const FiniteMechanismMatrix identity(
      {{Q("1"), Q("0")}, {Q("0"), Q("1")}});
  EXPECT_EQ(utility(identity, Q("1/10")), Q("0"));

  // gamma = 0 charges exactly the average off-diagonal mass.
  const auto mx = truncated_geometric(Q("1/2"), 3);
  Rational off_diag = 0;
  for (int i = 0; i <= 3; ++i) {
    for (int r = 0; r <= 3; ++r) {
      if (r != i) off_diag += mx.at(i, r);
    }
  }
  EXPECT_EQ(utility(mx, Q("0")), -off_diag / 4);

  // Less noise (smaller alpha) is strictly better for the uniform prior.
  const Rational gamma = Q("1/10");
  const Rational u34 = utility(truncated_geometric(Q("3/4"), 5), gamma);
  const Rational u12 = utility(truncated_geometric(Q("1/2"), 5), gamma);
  const Rational u14 = utility(truncated_geometric(Q("1/4"), 5), gamma);
  EXPECT_LT(u34, u12);
  EXPECT_LT(u12, u14);

  EXPECT_THROW(utility(mx, Q("-1")), std::invalid_argument);
}

}  // namespace
}  // namespace votepriv
