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
#ifndef VOTEPRIV_HISTOGRAM_HPP_
#define VOTEPRIV_HISTOGRAM_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "votepriv/rational.hpp"

namespace votepriv {

// Histogram of a database: non-negative per-value counts. The database size n
// is the sum of the counts.
struct Histogram {
  std::vector<int> counts;

  Histogram() = default;
  explicit Histogram(std::vector<int> c) : counts(std::move(c)) {}
  Histogram(std::initializer_list<int> c) : counts(c) {}

  int bins() const { return static_cast<int>(counts.size()); }
  int total() const;

  int operator[](int i) const { return counts[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return counts[static_cast<std::size_t>(i)]; }
  bool operator==(const Histogram&) const = default;
  auto operator<=>(const Histogram&) const = default;

  // Comma-joined counts, e.g. "6,1".
  std::string to_string() const;
  static Histogram parse(const std::string& text);
};

struct HistogramHash {
  std::size_t operator()(const Histogram& h) const;
};

// Number of histograms of total n over c bins: C(n+c-1, c-1).
BigInt histogram_count(int n, int c);

// Streams every histogram of total n over c >= 2 bins exactly once, in
// colexicographic order: histograms are ordered by comparing the reversed
// count vector (t_c, ..., t_1) lexicographically, so for n=2, c=2 the order
// is (2,0), (1,1), (0,2). The order is part of the public contract; witness
// reporting and output-label interning depend on it being stable.
class HistogramEnumerator {
 public:
  HistogramEnumerator(int n, int c);

  bool done() const { return done_; }
  const Histogram& current() const { return current_; }
  void advance();

 private:
  Histogram current_;
  bool done_ = false;
};

// Convenience wrapper over HistogramEnumerator.
void for_each_histogram(int n, int c,
                        const std::function<void(const Histogram&)>& fn);

std::vector<Histogram> all_histograms(int n, int c);

}  // namespace votepriv

#endif  // VOTEPRIV_HISTOGRAM_HPP_
