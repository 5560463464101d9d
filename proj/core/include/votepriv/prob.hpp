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
#ifndef VOTEPRIV_PROB_HPP_
#define VOTEPRIV_PROB_HPP_

#include "votepriv/distribution.hpp"
#include "votepriv/histogram.hpp"
#include "votepriv/rational.hpp"

namespace votepriv {

// Grows the shared factorial memo table up to n!. Call before parallel
// sections; afterwards factorial() reads are lock-free and the table is
// effectively read-only. Growing is internally synchronized.
void ensure_factorials(int n);

// n! from the memo table (grows it if needed).
const BigInt& factorial(int n);

// C(n, k) exactly; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

// Pr(multinomial(n, pi) = t) = n!/(t_1! ... t_c!) * prod p_i^{t_i}, exact.
// Returns 0 when some p_i == 0 has t_i > 0. Throws on dimension mismatch.
Rational multinomial_pmf(const Histogram& t, const VoteDistribution& pi);

// Pr(Bin(n, p) = k) = C(n,k) p^k (1-p)^{n-k}, exact. Throws unless
// 0 <= k <= n.
Rational binomial_pmf(int k, int n, const Rational& p);

// Pr(Hist(X) = t | X_i = x) for an i.i.d. database of t.total() rows:
// equals the multinomial pmf of t - e_x over n-1 rows, and 0 when t[x] == 0
// (the fixed row contradicts the histogram). Independent of the row index i.
// Throws if t.total() < 1, on dimension mismatch, or x out of range.
Rational cond_hist_prob(const Histogram& t, int x, const VoteDistribution& pi);

}  // namespace votepriv

#endif  // VOTEPRIV_PROB_HPP_
