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
#ifndef VOTEPRIV_GEOMETRIC_HPP_
#define VOTEPRIV_GEOMETRIC_HPP_

#include <string>
#include <vector>

#include "votepriv/rational.hpp"

namespace votepriv {

// Row-stochastic transition matrix of an oblivious mechanism over a count
// query: entry (i, r) is the exact probability of outputting r on query
// result i, for i, r in 0..n.
class FiniteMechanismMatrix {
 public:
  explicit FiniteMechanismMatrix(std::vector<std::vector<Rational>> rows);

  int size() const { return static_cast<int>(rows_.size()); }  // n + 1
  const Rational& at(int i, int r) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
  }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  // Exact-rational grid, one row per line.
  std::string to_string() const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Two-sided geometric noise with parameter alpha in (0, 1) added to a count
// query over 0..n, with all mass below 0 collapsed onto 0 and above n onto
// n: interior entries (1-alpha)/(1+alpha) alpha^|i-r|, boundary columns
// alpha^i/(1+alpha) and alpha^(n-i)/(1+alpha). Every row sums to exactly 1.
// The limits alpha -> 1 (identity) and alpha -> 0 (uniform output) are
// excluded.
FiniteMechanismMatrix truncated_geometric(const Rational& alpha, int n);

// Largest ratio of matching entries across adjacent rows |i - i'| = 1 (the
// sensitivity-1 count-query adjacency); the mechanism's exact DP epsilon is
// ln of this ratio. Throws std::domain_error when a zero entry faces a
// positive one (epsilon unbounded).
Rational exact_dp_ratio(const FiniteMechanismMatrix& mx);

// Expected utility under the loss 1 + gamma |i - r| (zero when i == r) and
// the uniform prior over query results:
// u = -(1/(n+1)) sum_i sum_{r != i} mx[i][r] (1 + gamma |i - r|).
Rational utility(const FiniteMechanismMatrix& mx, const Rational& gamma);

}  // namespace votepriv

#endif  // VOTEPRIV_GEOMETRIC_HPP_
