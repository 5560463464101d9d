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
#include "votepriv/delta.hpp"

#include <algorithm>
#include <cmath>

#include "votepriv/prob.hpp"

namespace votepriv {

namespace {

void require_ratio(const Rational& r) {
  if (r < 1) {
    throw std::invalid_argument("eps_ratio must be >= 1 (r = e^eps, eps >= 0)");
  }
}

}  // namespace

Rational ConditionalGrid::prob(int output, int x) const {
  return make_rational(mass(output, x), denom_);
}

ConditionalGrid::ConditionalGrid(Mechanism& m, const VoteDistribution& pi)
    : mech_(m), n_(m.n()), c_(m.c()) {
  if (pi.size() != c_) {
    throw std::invalid_argument("conditional grid: dimension mismatch");
  }
  if (n_ < 1) {
    throw std::invalid_argument("conditional grid: need n >= 1");
  }
  denom_ = pow_int(pi.common_den(), static_cast<unsigned long>(n_ - 1));
  supported_.resize(static_cast<std::size_t>(c_));
  for (int x = 0; x < c_; ++x) {
    supported_[static_cast<std::size_t>(x)] = pi.supported(x);
    if (pi.supported(x)) ++support_size_;
  }

  const std::vector<BigInt>& num = pi.scaled_num();
  bool unit_numerators = true;
  for (const BigInt& v : num) {
    if (v != 1) unit_numerators = false;
  }

  // Depth-first walk over bins c-1 .. 1 (bin 0 takes the remainder), which
  // visits histograms in colexicographic order. Along the path we maintain
  // the multinomial coefficient n!/(prod t_b!) as a product of binomials and
  // the power product prod num_b^{t_b}. Branches that acquire a factor
  // num_b = 0 with t_b > 0 contribute nothing for any supported value and
  // are pruned whole.
  Histogram t;
  t.counts.assign(static_cast<std::size_t>(c_), 0);
  std::vector<BigInt> coeff_stack(static_cast<std::size_t>(c_) + 1);
  std::vector<BigInt> pw_stack(static_cast<std::size_t>(c_) + 1);
  std::vector<BigInt> binom_stack(static_cast<std::size_t>(c_) + 1);
  BigInt weight, pw_without_x;

  auto leaf = [&](const BigInt& coeff, const BigInt& pw) {
    const int output = mech_.output_id(t);
    if (output >= outputs_) {
      outputs_ = output + 1;
      acc_.resize(static_cast<std::size_t>(outputs_) *
                  static_cast<std::size_t>(c_));
    }
    BigInt* row = acc_.data() + static_cast<std::size_t>(output) *
                                    static_cast<std::size_t>(c_);
    for (int x = 0; x < c_; ++x) {
      const int tx = t[x];
      if (tx == 0 || !supported_[static_cast<std::size_t>(x)]) continue;
      // Mass of t under conditioning on x: multinomial over the n-1 free
      // rows of t - e_x, i.e. coeff * t_x / n, times num^(t - e_x).
      mpz_mul_ui(weight.get_mpz_t(), coeff.get_mpz_t(),
                 static_cast<unsigned long>(tx));
      mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(),
                      static_cast<unsigned long>(n_));
      if (!unit_numerators) {
        mpz_divexact(pw_without_x.get_mpz_t(), pw.get_mpz_t(),
                     num[static_cast<std::size_t>(x)].get_mpz_t());
        mpz_mul(weight.get_mpz_t(), weight.get_mpz_t(),
                pw_without_x.get_mpz_t());
      }
      row[x] += weight;
    }
  };

  auto walk = [&](auto&& self, int bin, int rem) -> void {
    const BigInt& coeff_in = coeff_stack[static_cast<std::size_t>(bin) + 1];
    const BigInt& pw_in = pw_stack[static_cast<std::size_t>(bin) + 1];
    if (bin == 0) {
      t[0] = rem;
      if (rem > 0 && num[0] == 0) return;
      if (!unit_numerators) {
        pw_stack[0] = pw_in * pow_int(num[0], static_cast<unsigned long>(rem));
        leaf(coeff_in, pw_stack[0]);
      } else {
        leaf(coeff_in, pw_in);
      }
      return;
    }
    BigInt& coeff_out = coeff_stack[static_cast<std::size_t>(bin)];
    BigInt& pw_out = pw_stack[static_cast<std::size_t>(bin)];
    BigInt& binom = binom_stack[static_cast<std::size_t>(bin)];
    binom = 1;
    pw_out = pw_in;
    for (int tb = 0; tb <= rem; ++tb) {
      if (tb > 0) {
        // C(rem, tb) from C(rem, tb-1), and num_bin^tb from num_bin^(tb-1).
        mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                   static_cast<unsigned long>(rem - tb + 1));
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                        static_cast<unsigned long>(tb));
        if (!unit_numerators) {
          pw_out *= num[static_cast<std::size_t>(bin)];
          if (pw_out == 0) break;  // dead branch: unsupported bin occupied
        }
      }
      t[bin] = tb;
      coeff_out = coeff_in * binom;
      self(self, bin - 1, rem - tb);
    }
    t[bin] = 0;
  };

  ensure_factorials(n_);
  coeff_stack[static_cast<std::size_t>(c_)] = 1;
  pw_stack[static_cast<std::size_t>(c_)] = 1;
  walk(walk, c_ - 1, n_);
}

namespace {

// Positive part sum over outputs for the ordered pair (x, y):
// sum_o max(0, A[o][x] * rden - A[o][y] * rnum). When collect != nullptr the
// contributing output ids are appended.
BigInt pair_positive_sum(const ConditionalGrid& grid, int x, int y,
                         const BigInt& rnum, const BigInt& rden,
                         std::vector<int>* collect = nullptr) {
  BigInt sum = 0;
  BigInt diff;
  const bool unit_ratio = rnum == 1 && rden == 1;
  for (int o = 0; o < grid.outputs(); ++o) {
    const BigInt& ax = grid.mass(o, x);
    const BigInt& ay = grid.mass(o, y);
    if (unit_ratio) {
      diff = ax - ay;
    } else {
      diff = ax * rden - ay * rnum;
    }
    if (diff > 0) {
      sum += diff;
      if (collect != nullptr) collect->push_back(o);
    }
  }
  return sum;
}

}  // namespace

DeltaResult delta_from_grid(const ConditionalGrid& grid,
                            const Rational& eps_ratio) {
  require_ratio(eps_ratio);
  if (grid.support_size() < 2) {
    throw std::invalid_argument(
        "delta: distribution has fewer than two supported values");
  }
  const BigInt& rnum = eps_ratio.get_num();
  const BigInt& rden = eps_ratio.get_den();
  const int c = grid.c();

  BigInt best = -1;
  int best_x = -1;
  int best_y = -1;
  for (int x = 0; x < c; ++x) {
    if (!grid.supported(x)) continue;
    for (int y = 0; y < c; ++y) {
      if (y == x || !grid.supported(y)) continue;
      BigInt sum = pair_positive_sum(grid, x, y, rnum, rden);
      if (sum > best) {
        best = std::move(sum);
        best_x = x;
        best_y = y;
      }
    }
  }

  DeltaResult out;
  out.eps_ratio = eps_ratio;
  out.n = grid.n();
  out.x = best_x;
  out.xprime = best_y;
  out.delta = make_rational(best, grid.denom() * rden);
  pair_positive_sum(grid, best_x, best_y, rnum, rden, &out.witness);
  return out;
}

DeltaResult delta_exact(Mechanism& m, const VoteDistribution& pi,
                        const Rational& eps_ratio) {
  ConditionalGrid grid(m, pi);
  return delta_from_grid(grid, eps_ratio);
}

std::map<int, Rational> output_distribution(Mechanism& m,
                                            const VoteDistribution& pi,
                                            int x) {
  if (pi.size() != m.c()) {
    throw std::invalid_argument("output_distribution: dimension mismatch");
  }
  if (x < 0 || x >= m.c()) {
    throw std::invalid_argument("output_distribution: value out of range");
  }
  std::map<int, Rational> acc;
  for (HistogramEnumerator it(m.n(), m.c()); !it.done(); it.advance()) {
    const int output = m.output_id(it.current());
    acc[output] += cond_hist_prob(it.current(), x, pi);
  }
  // Include alphabet entries this conditioning never reaches.
  for (int o = 0; o < m.output_count(); ++o) acc.try_emplace(o, Rational(0));
  return acc;
}

DeltaResult delta_exact_pair(Mechanism& m, const VoteDistribution& pi,
                             const Rational& eps_ratio, int x, int xprime) {
  require_ratio(eps_ratio);
  if (x == xprime) {
    throw std::invalid_argument("delta_exact_pair: need x != x'");
  }
  const auto px = output_distribution(m, pi, x);
  const auto py = output_distribution(m, pi, xprime);
  DeltaResult out;
  out.eps_ratio = eps_ratio;
  out.n = m.n();
  out.x = x;
  out.xprime = xprime;
  out.delta = 0;
  for (const auto& [o, p] : px) {
    Rational diff = p - eps_ratio * py.at(o);
    if (diff > 0) {
      out.delta += diff;
      out.witness.push_back(o);
    }
  }
  return out;
}

DeltaResult delta_bruteforce_db(Mechanism& m, const VoteDistribution& pi,
                                const Rational& eps_ratio, int row_index) {
  require_ratio(eps_ratio);
  if (pi.size() != m.c()) {
    throw std::invalid_argument("bruteforce oracle: dimension mismatch");
  }
  const int n = m.n();
  const int c = m.c();
  if (n < 1) throw std::invalid_argument("bruteforce oracle: need n >= 1");
  if (row_index < 0 || row_index >= n) {
    throw std::invalid_argument("bruteforce oracle: row index out of range");
  }
  double size = std::pow(static_cast<double>(c), static_cast<double>(n));
  if (size > 1e7) {
    throw resource_guard_error(
        "bruteforce oracle: c^n exceeds the 10^7 database guard");
  }
  if (pi.support_size() < 2) {
    throw std::invalid_argument(
        "delta: distribution has fewer than two supported values");
  }

  const std::vector<BigInt>& num = pi.scaled_num();
  const BigInt denom = pow_int(pi.common_den(), static_cast<unsigned long>(n - 1));

  // acc[output][x] accumulates, over all databases whose row `row_index`
  // holds value x, the product of the numerators of every other row.
  std::vector<BigInt> acc;
  int outputs = 0;
  Histogram t;
  t.counts.assign(static_cast<std::size_t>(c), 0);
  std::vector<BigInt> prod_stack(static_cast<std::size_t>(n) + 1);
  prod_stack[0] = 1;

  // Straightforward nested recursion: choose each row's value in order.
  std::vector<int> rows(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == n) {
      const int output = m.output_id(t);
      if (output >= outputs) {
        outputs = output + 1;
        acc.resize(static_cast<std::size_t>(outputs) *
                   static_cast<std::size_t>(c));
      }
      acc[static_cast<std::size_t>(output) * static_cast<std::size_t>(c) +
          static_cast<std::size_t>(rows[static_cast<std::size_t>(row_index)])] +=
          prod_stack[static_cast<std::size_t>(n)];
      return;
    }
    for (int v = 0; v < c; ++v) {
      if (row == row_index) {
        prod_stack[static_cast<std::size_t>(row) + 1] =
            prod_stack[static_cast<std::size_t>(row)];
      } else {
        if (num[static_cast<std::size_t>(v)] == 0) continue;
        prod_stack[static_cast<std::size_t>(row) + 1] =
            prod_stack[static_cast<std::size_t>(row)] *
            num[static_cast<std::size_t>(v)];
      }
      rows[static_cast<std::size_t>(row)] = v;
      ++t[v];
      self(self, row + 1);
      --t[v];
    }
  };
  rec(rec, 0);

  // Same maximization as the grid path, over this oracle's masses.
  const BigInt& rnum = eps_ratio.get_num();
  const BigInt& rden = eps_ratio.get_den();
  BigInt best = -1;
  int best_x = -1;
  int best_y = -1;
  std::vector<int> best_witness;
  BigInt diff;
  for (int x = 0; x < c; ++x) {
    if (!pi.supported(x)) continue;
    for (int y = 0; y < c; ++y) {
      if (y == x || !pi.supported(y)) continue;
      BigInt sum = 0;
      std::vector<int> witness;
      for (int o = 0; o < outputs; ++o) {
        const BigInt& ax = acc[static_cast<std::size_t>(o) *
                               static_cast<std::size_t>(c) +
                               static_cast<std::size_t>(x)];
        const BigInt& ay = acc[static_cast<std::size_t>(o) *
                               static_cast<std::size_t>(c) +
                               static_cast<std::size_t>(y)];
        diff = ax * rden - ay * rnum;
        if (diff > 0) {
          sum += diff;
          witness.push_back(o);
        }
      }
      if (sum > best) {
        best = std::move(sum);
        best_x = x;
        best_y = y;
        best_witness = std::move(witness);
      }
    }
  }

  DeltaResult out;
  out.eps_ratio = eps_ratio;
  out.n = n;
  out.x = best_x;
  out.xprime = best_y;
  out.delta = make_rational(best, denom * rden);
  out.witness = std::move(best_witness);
  return out;
}

DeltaResult delta_via_trails(Mechanism& m, const VoteDistribution& pi,
                             Direction d) {
  const int c = m.c();
  if (d.j < 0 || d.j >= c || d.k < 0 || d.k >= c || d.j == d.k) {
    throw std::invalid_argument("delta_via_trails: bad direction");
  }
  const auto pj = output_distribution(m, pi, d.j);
  const auto pk = output_distribution(m, pi, d.k);

  DeltaResult out;
  out.eps_ratio = 1;
  out.n = m.n();
  out.x = d.j;
  out.xprime = d.k;

  std::vector<char> in_s(static_cast<std::size_t>(m.output_count()), 0);
  for (const auto& [o, p] : pj) {
    if (p > pk.at(o)) {
      in_s[static_cast<std::size_t>(o)] = 1;
      out.witness.push_back(o);
    }
  }

  std::vector<Histogram> preimage;
  for (HistogramEnumerator it(m.n(), c); !it.done(); it.advance()) {
    if (in_s[static_cast<std::size_t>(m.output_id(it.current()))]) {
      preimage.push_back(it.current());
    }
  }

  // The telescoped sum: only entry and exit probabilities survive.
  out.delta = 0;
  for (const Trail& trail : partition_into_trails(preimage, d)) {
    out.delta += cond_hist_prob(trail.exit(), d.j, pi);
    out.delta -= cond_hist_prob(trail.entry, d.k, pi);
  }
  return out;
}

Rational simulator_ddp_min_delta(Mechanism& m, const VoteDistribution& pi,
                                 const Rational& eps_ratio) {
  require_ratio(eps_ratio);
  ConditionalGrid grid(m, pi);
  if (grid.support_size() < 2) {
    throw std::invalid_argument(
        "delta: distribution has fewer than two supported values");
  }
  const BigInt& rnum = eps_ratio.get_num();
  const BigInt& rden = eps_ratio.get_den();
  const int c = grid.c();

  // pair_sum[x][y] = numerator of the one-sided delta needed for
  // Pr(M | x) <= r Pr(M | y) + delta.
  std::vector<std::vector<BigInt>> pair_sum(
      static_cast<std::size_t>(c), std::vector<BigInt>(static_cast<std::size_t>(c)));
  for (int x = 0; x < c; ++x) {
    if (!grid.supported(x)) continue;
    for (int y = 0; y < c; ++y) {
      if (!grid.supported(y) || x == y) continue;
      pair_sum[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          pair_positive_sum(grid, x, y, rnum, rden);
    }
  }

  bool first = true;
  BigInt best;
  for (int guess = 0; guess < c; ++guess) {
    if (!grid.supported(guess)) continue;
    // Worst case over the actual conditioned value x, both directions.
    BigInt worst = 0;
    for (int x = 0; x < c; ++x) {
      if (!grid.supported(x) || x == guess) continue;
      worst = std::max(
          worst, pair_sum[static_cast<std::size_t>(x)][static_cast<std::size_t>(guess)]);
      worst = std::max(
          worst, pair_sum[static_cast<std::size_t>(guess)][static_cast<std::size_t>(x)]);
    }
    if (first || worst < best) {
      best = worst;
      first = false;
    }
  }
  return make_rational(best, grid.denom() * rden);
}

std::vector<std::pair<Rational, Rational>> eps_delta_curve(
    Mechanism& m, const VoteDistribution& pi,
    const std::vector<Rational>& ratios) {
  ConditionalGrid grid(m, pi);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(ratios.size());
  for (const Rational& r : ratios) {
    out.emplace_back(r, delta_from_grid(grid, r).delta);
  }
  return out;
}

}  // namespace votepriv
