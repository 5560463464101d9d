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
#ifndef VOTEPRIV_CLOSED_FORM_HPP_
#define VOTEPRIV_CLOSED_FORM_HPP_

#include "votepriv/distribution.hpp"
#include "votepriv/rational.hpp"

namespace votepriv {

// Exact delta at eps = 0 of the two-bin histogram identity under (p, 1-p):
// the maximizing set is the trail of histograms (i, n-i) with i strictly
// above p*n, so delta = C(n-1, floor(pn)) p^floor(pn) (1-p)^(n-1-floor(pn)).
// When p*n is an integer the boundary histogram contributes zero mass and
// the exit count is pn + 1. Requires 0 < p < 1, n >= 1.
Rational hist2_delta_closed_form(const Rational& p, int n);

// Exact delta at eps = 0 of the alpha-majority rule under (p, 1-p): the two
// candidate output sets are trails whose entries have zero conditional mass,
// so delta collapses to the pivotal exit probability
// C(n-1, ceil(alpha n) - 1) p^(ceil(alpha n) - 1) (1-p)^(n - ceil(alpha n)),
// and 0 when the rule is constant (ceil(alpha n) is 0 or exceeds n with the
// complementary set empty). Requires 0 <= alpha <= 1, 0 < p < 1, n >= 1.
Rational majority_delta_exact(const Rational& alpha, const Rational& p, int n);

// Per-n geometric decay rate of the alpha-majority delta:
// (p/alpha)^alpha ((1-p)/(1-alpha))^(1-alpha), equal to 1 iff alpha == p.
// Requires 0 < alpha < 1 (the degenerate endpoints have exact forms above).
double majority_rate(const Rational& alpha, const Rational& p);

// Exact pair-restricted delta at eps = 0 of the c-bin histogram identity for
// the ordered value pair (j, k), via the two-bin mixture: conditioned on the
// number of rows falling in bins {j, k}, the pair behaves as a two-bin
// histogram of that size, so with p = p_j/(p_j+p_k) and P = p_j+p_k,
//   delta = sum_{s=1..n} delta_2bin(p, s) * Pr(Bin(n-1, P) = s-1)
// (s counts the conditioned row; the other s-1 come from the n-1 free rows).
// Degenerate pairs: p_k = 0 or p_j = 0 make the conditioning fully
// revealing (delta = 1).
Rational histc_delta_mixture(const VoteDistribution& pi, int n, int j, int k);

}  // namespace votepriv

#endif  // VOTEPRIV_CLOSED_FORM_HPP_
