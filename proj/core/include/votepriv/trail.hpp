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
#ifndef VOTEPRIV_TRAIL_HPP_
#define VOTEPRIV_TRAIL_HPP_

#include <utility>
#include <vector>

#include "votepriv/distribution.hpp"
#include "votepriv/histogram.hpp"
#include "votepriv/prob.hpp"

namespace votepriv {

// Direction (j, k): along the trail bin j loses one unit per step and bin k
// gains one.
struct Direction {
  int j;
  int k;
};

// A trail is the set {entry - z*e_j + z*e_k : 0 <= z <= length} of
// consecutive histograms. entry[j] >= length keeps every point
// non-negative.
struct Trail {
  Histogram entry;
  Direction dir;
  int length;  // q; a zero-length trail is the single entry point

  Histogram exit() const;
  // The q+1 member histograms, entry first, exit last.
  std::vector<Histogram> points() const;
};

// Validates the invariants above; throws std::invalid_argument.
void validate_trail(const Trail& t);

// Splits a set of histograms (all with equal totals and bin counts) into
// maximal non-overlapping (j,k)-trails whose union is the input set.
// Histograms agreeing on every bin outside {j, k} (and hence on
// t_j + t_k) are grouped, sorted by t_j descending, and cut at gaps; each
// maximal consecutive run is one trail. Output ordering is deterministic.
std::vector<Trail> partition_into_trails(const std::vector<Histogram>& set,
                                         Direction d);

// JSON form {"entry":[6,1],"j":1,"k":2,"q":4} with 1-based direction
// indices. Round-trips exactly.
std::string trail_to_json(const Trail& t);
Trail trail_from_json(const std::string& text);

// Both sides of the telescoping trail identity, evaluated exactly:
//   lhs = Pr(Hist in T | X_i = x_j) - Pr(Hist in T | X_i = x_k)
//       (conditional masses summed point by point), and
//   rhs = Pr(Hist = exit | X_i = x_j) - Pr(Hist = entry | X_i = x_k).
// For independent rows lhs == rhs; exactness of that equality is the
// correctness bedrock of the trail-based delta engine.
std::pair<Rational, Rational> trail_theorem_sides(const Trail& t,
                                                  const VoteDistribution& pi);

}  // namespace votepriv

#endif  // VOTEPRIV_TRAIL_HPP_
