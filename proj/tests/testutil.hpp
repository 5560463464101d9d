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
#ifndef VOTEPRIV_TESTS_TESTUTIL_HPP_
#define VOTEPRIV_TESTS_TESTUTIL_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "votepriv/distribution.hpp"
#include "votepriv/histogram.hpp"
#include "votepriv/rational.hpp"

namespace votepriv::testutil {

inline Rational Q(const char* text) { return parse_rational(text); }

// Visits every length-n sequence over values 0..c-1. The brute-force oracle
// for everything probability-shaped in these tests.
inline void enumerate_sequences(int n, int c,
                                const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> rows(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(rows);
    int pos = n - 1;
    while (pos >= 0 && rows[static_cast<std::size_t>(pos)] == c - 1) {
      rows[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++rows[static_cast<std::size_t>(pos)];
  }
}

inline Rational sequence_prob(const std::vector<int>& rows,
                              const VoteDistribution& pi) {
  Rational p = 1;
  for (int v : rows) p *= pi[v];
  return p;
}

inline Histogram sequence_hist(const std::vector<int>& rows, int c) {
  Histogram t;
  t.counts.assign(static_cast<std::size_t>(c), 0);
  for (int v : rows) ++t[v];
  return t;
}

// Oracle for Pr(Hist(X) = t): sum of sequence probabilities.
inline Rational oracle_hist_prob(const Histogram& t, const VoteDistribution& pi) {
  Rational total = 0;
  enumerate_sequences(t.total(), t.bins(), [&](const std::vector<int>& rows) {
    if (sequence_hist(rows, t.bins()) == t) total += sequence_prob(rows, pi);
  });
  return total;
}

// Oracle for Pr(Hist(X) = t | X_i = x): enumerate the other rows only.
inline Rational oracle_cond_hist_prob(const Histogram& t, int x,
                                      const VoteDistribution& pi) {
  const int n = t.total();
  Rational total = 0;
  enumerate_sequences(n - 1, t.bins(), [&](const std::vector<int>& rows) {
    Histogram h = sequence_hist(rows, t.bins());
    ++h[x];
    if (h == t) total += sequence_prob(rows, pi);
  });
  return total;
}

// Deterministic splitmix64 for test-case generation.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  VoteDistribution distribution(int c, bool all_positive = true) {
    while (true) {
      std::vector<int> w(static_cast<std::size_t>(c));
      int total = 0, positive = 0;
      for (int i = 0; i < c; ++i) {
        w[static_cast<std::size_t>(i)] = range(all_positive ? 1 : 0, 9);
        total += w[static_cast<std::size_t>(i)];
        positive += w[static_cast<std::size_t>(i)] > 0;
      }
      if (positive < 2) continue;
      std::vector<Rational> probs;
      for (int v : w) probs.push_back(make_rational(v, total));
      return VoteDistribution(std::move(probs));
    }
  }

  Histogram histogram(int n, int c) {
    Histogram t;
    t.counts.assign(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < n; ++i) ++t[below(c)];
    return t;
  }
};

}  // namespace votepriv::testutil

#endif  // VOTEPRIV_TESTS_TESTUTIL_HPP_
