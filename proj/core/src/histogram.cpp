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
#include "votepriv/histogram.hpp"

#include <numeric>
#include <stdexcept>

#include "votepriv/prob.hpp"

namespace votepriv {

int Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string Histogram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

Histogram Histogram::parse(const std::string& text) {
  Histogram h;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed histogram: " + text);
    const int v = std::stoi(tok);
    if (v < 0) throw std::invalid_argument("negative histogram count: " + text);
    h.counts.push_back(v);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return h;
}

std::size_t HistogramHash::operator()(const Histogram& h) const {
  // FNV-1a over the counts.
  std::size_t hash = 1469598103934665603ull;
  for (int v : h.counts) {
    hash ^= static_cast<std::size_t>(v);
    hash *= 1099511628211ull;
  }
  return hash;
}

BigInt histogram_count(int n, int c) {
  if (n < 0 || c < 1) throw std::invalid_argument("histogram_count: bad n or c");
  return binomial(n + c - 1, c - 1);
}

HistogramEnumerator::HistogramEnumerator(int n, int c) {
  if (n < 0) throw std::invalid_argument("histogram enumeration: n must be >= 0");
  if (c < 2) throw std::invalid_argument("histogram enumeration: c must be >= 2");
  current_.counts.assign(static_cast<std::size_t>(c), 0);
  current_.counts[0] = n;
}

void HistogramEnumerator::advance() {
  auto& t = current_.counts;
  const int c = static_cast<int>(t.size());
  if (t[0] > 0) {
    // Shift one unit from the fastest-moving bin to its neighbor.
    --t[0];
    ++t[1];
    return;
  }
  int j = 1;
  while (j < c && t[static_cast<std::size_t>(j)] == 0) ++j;
  if (j >= c - 1) {
    done_ = true;
    return;
  }
  const int val = t[static_cast<std::size_t>(j)];
  t[static_cast<std::size_t>(j)] = 0;
  ++t[static_cast<std::size_t>(j + 1)];
  t[0] = val - 1;
}

void for_each_histogram(int n, int c,
                        const std::function<void(const Histogram&)>& fn) {
  for (HistogramEnumerator it(n, c); !it.done(); it.advance()) fn(it.current());
}

std::vector<Histogram> all_histograms(int n, int c) {
  std::vector<Histogram> out;
  for_each_histogram(n, c, [&](const Histogram& h) { out.push_back(h); });
  return out;
}

}  // namespace votepriv
