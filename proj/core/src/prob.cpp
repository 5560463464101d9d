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
#include "votepriv/prob.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace votepriv {

namespace {

// Shared factorial table. A deque keeps references stable across growth, so
// readers holding factorial(k) across an ensure_factorials() call stay valid.
std::deque<BigInt>& factorial_table() {
  static std::deque<BigInt>* table = new std::deque<BigInt>{BigInt(1)};
  return *table;
}
std::mutex factorial_mutex;
std::atomic<int> factorial_max{0};

}  // namespace

void ensure_factorials(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  if (factorial_max.load(std::memory_order_acquire) >= n) return;
  std::lock_guard<std::mutex> lock(factorial_mutex);
  auto& table = factorial_table();
  for (int k = static_cast<int>(table.size()); k <= n; ++k) {
    table.push_back(table.back() * k);
  }
  if (factorial_max.load(std::memory_order_relaxed) < n) {
    factorial_max.store(n, std::memory_order_release);
  }
}

const BigInt& factorial(int n) {
  ensure_factorials(n);
  return factorial_table()[static_cast<std::size_t>(n)];
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt out;
  // GMP's binomial is faster than the factorial-quotient form and exact.
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Rational multinomial_pmf(const Histogram& t, const VoteDistribution& pi) {
  if (t.bins() != pi.size()) {
    throw std::invalid_argument("multinomial_pmf: dimension mismatch");
  }
  const int n = t.total();
  ensure_factorials(n);
  BigInt coeff = factorial(n);
  BigInt num = 1;
  BigInt den_pow = 1;
  for (int i = 0; i < t.bins(); ++i) {
    const int ti = t[i];
    if (ti == 0) continue;
    coeff /= factorial(ti);
    num *= pow_int(pi.scaled_num()[static_cast<std::size_t>(i)],
                   static_cast<unsigned long>(ti));
    if (num == 0) return Rational(0);
  }
  den_pow = pow_int(pi.common_den(), static_cast<unsigned long>(n));
  return make_rational(coeff * num, den_pow);
}

Rational binomial_pmf(int k, int n, const Rational& p) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("binomial_pmf: k out of range");
  }
  Rational q = 1 - p;
  Rational pk, qk;
  mpq_class pp = p, qq = q;
  mpz_pow_ui(pk.get_num_mpz_t(), pp.get_num_mpz_t(),
             static_cast<unsigned long>(k));
  mpz_pow_ui(pk.get_den_mpz_t(), pp.get_den_mpz_t(),
             static_cast<unsigned long>(k));
  mpz_pow_ui(qk.get_num_mpz_t(), qq.get_num_mpz_t(),
             static_cast<unsigned long>(n - k));
  mpz_pow_ui(qk.get_den_mpz_t(), qq.get_den_mpz_t(),
             static_cast<unsigned long>(n - k));
  Rational out = Rational(binomial(n, k)) * pk * qk;
  return out;
}

Rational cond_hist_prob(const Histogram& t, int x, const VoteDistribution& pi) {
  if (t.bins() != pi.size()) {
    throw std::invalid_argument("cond_hist_prob: dimension mismatch");
  }
  if (x < 0 || x >= t.bins()) {
    throw std::invalid_argument("cond_hist_prob: value index out of range");
  }
  if (t.total() < 1) {
    throw std::invalid_argument("cond_hist_prob: histogram must be nonempty");
  }
  if (t[x] == 0) return Rational(0);
  Histogram rest = t;
  --rest[x];
  return multinomial_pmf(rest, pi);
}

}  // namespace votepriv
