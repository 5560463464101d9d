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
#ifndef VOTEPRIV_DELTA_HPP_
#define VOTEPRIV_DELTA_HPP_

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "votepriv/distribution.hpp"
#include "votepriv/mechanism.hpp"
#include "votepriv/trail.hpp"

namespace votepriv {

// Thrown when an operation would exceed its configured size guard (the
// database-enumeration oracle). The CLI maps this to its own exit code.
struct resource_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact delta at ratio r = e^eps, with the witnessing conditioned values and
// maximizing output set. Bin indices are 0-based in memory (serialization
// renders them 1-based to match the x_1..x_c naming of values).
struct DeltaResult {
  Rational delta;
  Rational eps_ratio;
  int n = 0;
  int x = -1;
  int xprime = -1;
  std::vector<int> witness;  // output ids of the maximizing set S, ascending

  double delta_float() const { return to_double(delta); }
};

// Exact conditional output distribution table: for every supported value x,
// the mass P_x(o) = Pr(M(X) = o | X_i = x) as an integer numerator over the
// shared denominator den^(n-1). Built in one pass over the histogram
// universe; every delta variant evaluated afterwards reuses it.
class ConditionalGrid {
 public:
  ConditionalGrid(Mechanism& m, const VoteDistribution& pi);

  Mechanism& mechanism() const { return mech_; }
  int n() const { return n_; }
  int c() const { return c_; }
  int outputs() const { return outputs_; }
  const BigInt& denom() const { return denom_; }
  bool supported(int x) const { return supported_[static_cast<std::size_t>(x)]; }
  int support_size() const { return support_size_; }

  // Numerator of P_x(output); zero for unsupported x.
  const BigInt& mass(int output, int x) const {
    return acc_[static_cast<std::size_t>(output) * static_cast<std::size_t>(c_) +
                static_cast<std::size_t>(x)];
  }
  Rational prob(int output, int x) const;

 private:
  Mechanism& mech_;
  int n_;
  int c_;
  int outputs_ = 0;
  BigInt denom_;
  std::vector<bool> supported_;
  int support_size_ = 0;
  std::vector<BigInt> acc_;  // outputs x c, row-major
};

// delta(r) = max over ordered supported pairs (x, x') of
// sum_o max(0, P_x(o) - r P_{x'}(o)); the witness S collects the outputs
// with strictly positive terms. Requires r >= 1 and at least two supported
// values. Ties between pairs resolve to the first pair in (x, x') order.
DeltaResult delta_from_grid(const ConditionalGrid& grid,
                            const Rational& eps_ratio);
DeltaResult delta_exact(Mechanism& m, const VoteDistribution& pi,
                        const Rational& eps_ratio);

// The same positive-part sum restricted to one ordered pair. Computed over
// the mpq-exact output distributions (independently of the grid path), so
// it doubles as a reference; x and x' need not be supported.
DeltaResult delta_exact_pair(Mechanism& m, const VoteDistribution& pi,
                             const Rational& eps_ratio, int x, int xprime);

// Conditional output distribution as exact rationals, including
// zero-probability outputs of the alphabet. x need not be supported.
std::map<int, Rational> output_distribution(Mechanism& m,
                                            const VoteDistribution& pi, int x);

// Independent oracle: enumerates all c^n databases as row sequences and
// conditions on the row at `row_index`. Identical contract to delta_exact.
// Throws resource_guard_error when c^n > 10^7.
DeltaResult delta_bruteforce_db(Mechanism& m, const VoteDistribution& pi,
                                const Rational& eps_ratio, int row_index = 0);

// Trail-accelerated evaluation for the ordered pair (d.j, d.k) at ratio 1:
// determines the witness S from the exact output distributions, partitions
// {t : M(t) in S} into (j,k)-trails, and sums only the trail endpoint
// probabilities. Exactly equals the pair-restricted delta at r = 1.
DeltaResult delta_via_trails(Mechanism& m, const VoteDistribution& pi,
                             Direction d);

// Minimal delta over guess-and-run simulators: the simulator inserts a fixed
// guessed value x' and applies M; both simulation-based inequalities must
// hold for every supported x and every output set at ratio r.
Rational simulator_ddp_min_delta(Mechanism& m, const VoteDistribution& pi,
                                 const Rational& eps_ratio);

// delta_exact at each ratio, in input order, sharing one grid.
std::vector<std::pair<Rational, Rational>> eps_delta_curve(
    Mechanism& m, const VoteDistribution& pi,
    const std::vector<Rational>& ratios);

}  // namespace votepriv

#endif  // VOTEPRIV_DELTA_HPP_
