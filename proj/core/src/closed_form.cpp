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
#include "votepriv/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "votepriv/prob.hpp"

namespace votepriv {

namespace {

// C(n-1, e-1) p^(e-1) (1-p)^(n-e): the conditional probability of the
// pivotal histogram (e, n-e) given one row fixed to the first value.
Rational pivotal_mass(const Rational& p, int n, long e) {
  Rational q = 1 - p;
  Rational pk = 1, qk = 1;
  mpz_pow_ui(pk.get_num_mpz_t(), p.get_num().get_mpz_t(),
             static_cast<unsigned long>(e - 1));
  mpz_pow_ui(pk.get_den_mpz_t(), p.get_den().get_mpz_t(),
             static_cast<unsigned long>(e - 1));
  mpz_pow_ui(qk.get_num_mpz_t(), q.get_num().get_mpz_t(),
             static_cast<unsigned long>(n - e));
  mpz_pow_ui(qk.get_den_mpz_t(), q.get_den().get_mpz_t(),
             static_cast<unsigned long>(n - e));
  return Rational(binomial(n - 1, static_cast<int>(e - 1))) * pk * qk;
}

}  // namespace

Rational hist2_delta_closed_form(const Rational& p, int n) {
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("hist2_delta_closed_form: need 0 < p < 1");
  }
  if (n < 1) throw std::invalid_argument("hist2_delta_closed_form: need n >= 1");
  // floor(p * n); the maximizing set keeps i strictly above p*n, so the
  // trail exits at count floor(pn) + 1 whether or not p*n is an integer.
  BigInt fl;
  Rational pn = p * n;
  mpz_fdiv_q(fl.get_mpz_t(), pn.get_num().get_mpz_t(), pn.get_den().get_mpz_t());
  const long exit_count = fl.get_si() + 1;
  return pivotal_mass(p, n, exit_count);
}

Rational majority_delta_exact(const Rational& alpha, const Rational& p, int n) {
  if (alpha < 0 || alpha > 1) {
    throw std::invalid_argument("majority_delta_exact: alpha must be in [0, 1]");
  }
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("majority_delta_exact: need 0 < p < 1");
  }
  if (n < 1) throw std::invalid_argument("majority_delta_exact: need n >= 1");
  // Smallest winning count for the first value: ceil(alpha * n).
  BigInt cl;
  Rational an = alpha * n;
  mpz_cdiv_q(cl.get_mpz_t(), an.get_num().get_mpz_t(), an.get_den().get_mpz_t());
  const long i_min = cl.get_si();
  if (i_min <= 0) {
    // The rule is constantly the first value; both output sets are trivial.
    return Rational(0);
  }
  // Both output sets are trails whose entries, (n, 0) and (0, n), have zero
  // mass under the opposite conditioning, and their exits (i_min, n-i_min)
  // and (i_min-1, n-i_min+1) share one free-row histogram, so the two
  // singleton-output deltas coincide.
  return pivotal_mass(p, n, i_min);
}

double majority_rate(const Rational& alpha, const Rational& p) {
  if (alpha <= 0 || alpha >= 1) {
    throw std::invalid_argument(
        "majority_rate: alpha must be strictly inside (0, 1); the endpoints "
        "have exact per-n forms via majority_delta_exact");
  }
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("majority_rate: need 0 < p < 1");
  }
  const double a = to_double(alpha);
  const double pp = to_double(p);
  return std::exp(a * (std::log(pp) - std::log(a)) +
                  (1 - a) * (std::log(1 - pp) - std::log(1 - a)));
}

Rational histc_delta_mixture(const VoteDistribution& pi, int n, int j, int k) {
  const int c = pi.size();
  if (j < 0 || j >= c || k < 0 || k >= c || j == k) {
    throw std::invalid_argument("histc_delta_mixture: bad pair");
  }
  if (n < 1) throw std::invalid_argument("histc_delta_mixture: need n >= 1");
  const Rational& pj = pi[j];
  const Rational& pk = pi[k];
  if (pj == 0 || pk == 0) {
    // Conditioning on a zero-probability value is fully revealing.
    return Rational(1);
  }
  const Rational pair_mass = pj + pk;
  const Rational p = pj / pair_mass;
  Rational delta = 0;
  for (int s = 1; s <= n; ++s) {
    // One of the s rows in bins {j, k} is the conditioned row itself.
    delta += hist2_delta_closed_form(p, s) *
             binomial_pmf(s - 1, n - 1, pair_mass);
  }
  return delta;
}

}  // namespace votepriv
