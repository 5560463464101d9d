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
#ifndef VOTEPRIV_HYPERPLANE_HPP_
#define VOTEPRIV_HYPERPLANE_HPP_

#include <vector>

#include "votepriv/distribution.hpp"
#include "votepriv/rational.hpp"

namespace votepriv {

// Decision hyperplanes of a GSR over the m! order coordinates. For
// canceling-out rules every hyperplane satisfies h . 1 = 0.
using Hyperplane = std::vector<Rational>;
using HyperplaneSet = std::vector<Hyperplane>;

// Hyperplanes of a positional scoring rule: one per candidate pair
// (k1 < k2), with order-V component s(V, k1) - s(V, k2). C(m, 2) planes,
// each orthogonal to the all-ones vector.
HyperplaneSet scoring_hyperplanes(const std::vector<Rational>& scores, int m);

// Signed normalized distance (pi . h) / ||h||_2. Throws on the zero vector.
double dist_to_hyperplane(const VoteDistribution& pi, const Hyperplane& h);

// The decay-rate expression min{ exp(-minDist^2 / (3 m! max_i pi_i) * n),
// sqrt(1/n) } where minDist = min_h |Dist(pi, h)|; the hidden constant of
// the asymptotic statement is not recoverable, so this is meaningful only
// for comparing decay branches and rates. Requires every pi_i > 0.
double gsr_exponential_bound(const VoteDistribution& pi,
                             const HyperplaneSet& planes, int m, int n);

}  // namespace votepriv

#endif  // VOTEPRIV_HYPERPLANE_HPP_
