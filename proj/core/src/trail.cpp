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
#include "votepriv/trail.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace votepriv {

Histogram Trail::exit() const {
  Histogram out = entry;
  out[dir.j] -= length;
  out[dir.k] += length;
  return out;
}

std::vector<Histogram> Trail::points() const {
  std::vector<Histogram> out;
  out.reserve(static_cast<std::size_t>(length) + 1);
  Histogram cur = entry;
  out.push_back(cur);
  for (int z = 1; z <= length; ++z) {
    --cur[dir.j];
    ++cur[dir.k];
    out.push_back(cur);
  }
  return out;
}

void validate_trail(const Trail& t) {
  const int c = t.entry.bins();
  if (t.dir.j < 0 || t.dir.j >= c || t.dir.k < 0 || t.dir.k >= c) {
    throw std::invalid_argument("trail direction out of range");
  }
  if (t.dir.j == t.dir.k) {
    throw std::invalid_argument("trail direction needs j != k");
  }
  if (t.length < 0) throw std::invalid_argument("trail length must be >= 0");
  if (t.entry[t.dir.j] < t.length) {
    throw std::invalid_argument("trail walks bin j negative");
  }
  for (int v : t.entry.counts) {
    if (v < 0) throw std::invalid_argument("trail entry has negative count");
  }
}

std::vector<Trail> partition_into_trails(const std::vector<Histogram>& set,
                                         Direction d) {
  if (set.empty()) return {};
  const int c = set.front().bins();
  const int n = set.front().total();
  if (d.j < 0 || d.j >= c || d.k < 0 || d.k >= c || d.j == d.k) {
    throw std::invalid_argument("partition_into_trails: bad direction");
  }

  // Key = the invariant coordinates: every bin outside {j, k}. Together
  // with the shared total n this pins t_j + t_k, so members of a group
  // differ only by moves along the (j,k) line.
  std::map<std::vector<int>, std::vector<int>> groups;  // key -> t_j values
  for (const Histogram& h : set) {
    if (h.bins() != c || h.total() != n) {
      throw std::invalid_argument(
          "partition_into_trails: histograms must share bin count and total");
    }
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(c) - 2);
    for (int i = 0; i < c; ++i) {
      if (i != d.j && i != d.k) key.push_back(h[i]);
    }
    groups[std::move(key)].push_back(h[d.j]);
  }

  std::vector<Trail> out;
  for (auto& [key, tj_values] : groups) {
    std::sort(tj_values.begin(), tj_values.end(), std::greater<int>());
    if (std::adjacent_find(tj_values.begin(), tj_values.end()) !=
        tj_values.end()) {
      throw std::invalid_argument("partition_into_trails: duplicate histogram");
    }
    int rest = 0;
    for (int v : key) rest += v;
    const int pair_total = n - rest;
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= tj_values.size(); ++i) {
      if (i == tj_values.size() || tj_values[i] != tj_values[i - 1] - 1) {
        // Run [run_start, i) of consecutive t_j values, descending: the
        // largest t_j is the entry of a maximal trail.
        Trail trail;
        trail.dir = d;
        trail.length = static_cast<int>(i - run_start) - 1;
        std::vector<int> counts(static_cast<std::size_t>(c), 0);
        std::size_t pos = 0;
        for (int b = 0; b < c; ++b) {
          if (b != d.j && b != d.k) counts[static_cast<std::size_t>(b)] = key[pos++];
        }
        counts[static_cast<std::size_t>(d.j)] = tj_values[run_start];
        counts[static_cast<std::size_t>(d.k)] = pair_total - tj_values[run_start];
        trail.entry = Histogram(std::move(counts));
        validate_trail(trail);
        out.push_back(std::move(trail));
        run_start = i;
      }
    }
  }
  return out;
}

std::string trail_to_json(const Trail& t) {
  nlohmann::ordered_json out;
  out["entry"] = t.entry.counts;
  out["j"] = t.dir.j + 1;
  out["k"] = t.dir.k + 1;
  out["q"] = t.length;
  return out.dump();
}

Trail trail_from_json(const std::string& text) {
  const auto parsed = nlohmann::json::parse(text);
  Trail t;
  t.entry = Histogram(parsed.at("entry").get<std::vector<int>>());
  t.dir.j = parsed.at("j").get<int>() - 1;
  t.dir.k = parsed.at("k").get<int>() - 1;
  t.length = parsed.at("q").get<int>();
  validate_trail(t);
  return t;
}

std::pair<Rational, Rational> trail_theorem_sides(const Trail& t,
                                                  const VoteDistribution& pi) {
  validate_trail(t);
  if (t.entry.bins() != pi.size()) {
    throw std::invalid_argument("trail_theorem_sides: dimension mismatch");
  }
  Rational lhs = 0;
  Histogram cur = t.entry;
  for (int z = 0; z <= t.length; ++z) {
    lhs += cond_hist_prob(cur, t.dir.j, pi);
    lhs -= cond_hist_prob(cur, t.dir.k, pi);
    if (z < t.length) {
      --cur[t.dir.j];
      ++cur[t.dir.k];
    }
  }
  Rational rhs = cond_hist_prob(t.exit(), t.dir.j, pi) -
                 cond_hist_prob(t.entry, t.dir.k, pi);
  return {lhs, rhs};
}

}  // namespace votepriv
