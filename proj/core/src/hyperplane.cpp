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

#include <cmath>
#include <stdexcept>

#include "votepriv/orders.hpp"

namespace votepriv {

HyperplaneSet scoring_hyperplanes(const std::vector<Rational>& scores, int m) {
  if (static_cast<int>(scores.size()) != m) {
    throw std::invalid_argument("scoring_hyperplanes: vector length != m");
  }
  const auto orders = canonical_orders(m);
  HyperplaneSet planes;
  for (int k1 = 0; k1 < m; ++k1) {
    for (int k2 = k1 + 1; k2 < m; ++k2) {
      Hyperplane h;
      h.reserve(orders.size());
      for (const LinearOrder& order : orders) {
        Rational s1, s2;
        for (int pos = 0; pos < m; ++pos) {
          if (order[static_cast<std::size_t>(pos)] == k1) {
            s1 = scores[static_cast<std::size_t>(pos)];
          }
          if (order[static_cast<std::size_t>(pos)] == k2) {
            s2 = scores[static_cast<std::size_t>(pos)];
          }
        }
        h.push_back(s1 - s2);
      }
      planes.push_back(std::move(h));
    }
  }
  return planes;
}

double dist_to_hyperplane(const VoteDistribution& pi, const Hyperplane& h) {
  if (pi.size() != static_cast<int>(h.size())) {
    throw std::invalid_argument("dist_to_hyperplane: dimension mismatch");
  }
  Rational dot = 0;
  double norm_sq = 0;
  bool zero = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0) zero = false;
    dot += pi[static_cast<int>(i)] * h[i];
    const double hv = to_double(h[i]);
    norm_sq += hv * hv;
  }
  if (zero) throw std::invalid_argument("dist_to_hyperplane: zero hyperplane");
  return to_double(dot) / std::sqrt(norm_sq);
}

double gsr_exponential_bound(const VoteDistribution& pi,
                             const HyperplaneSet& planes, int m, int n) {
  if (n < 1) throw std::invalid_argument("gsr_exponential_bound: need n >= 1");
  double min_dist = 0;
  bool first = true;
  for (const Hyperplane& h : planes) {
    const double d = std::fabs(dist_to_hyperplane(pi, h));
    if (first || d < min_dist) {
      min_dist = d;
      first = false;
    }
  }
  double max_p = 0;
  for (int i = 0; i < pi.size(); ++i) {
    if (pi[i] <= 0) {
      throw std::invalid_argument("gsr_exponential_bound: need every p_i > 0");
    }
    max_p = std::max(max_p, to_double(pi[i]));
  }
  const double exponential =
      std::exp(-min_dist * min_dist /
               (3.0 * static_cast<double>(num_orders(m)) * max_p) *
               static_cast<double>(n));
  const double polynomial = std::sqrt(1.0 / static_cast<double>(n));
  return std::min(exponential, polynomial);
}

}  // namespace votepriv
