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
#include "votepriv/orders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace votepriv {

int num_orders(int m) {
  int out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

std::vector<LinearOrder> canonical_orders(int m) {
  if (m < 1) throw std::invalid_argument("canonical_orders: m must be >= 1");
  if (m > 5) {
    throw std::invalid_argument(
        "canonical_orders: m > 5 is not supported; the profile universe has "
        "m! bins and exact enumeration over C(n+m!-1, m!-1) histograms is "
        "intractable beyond m! = 120");
  }
  LinearOrder order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<LinearOrder> out;
  out.reserve(static_cast<std::size_t>(num_orders(m)));
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

int order_index(const LinearOrder& order) {
  // Lexicographic rank of the permutation.
  const int m = static_cast<int>(order.size());
  int index = 0;
  for (int i = 0; i < m; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < m; ++j) {
      if (order[static_cast<std::size_t>(j)] < order[static_cast<std::size_t>(i)]) {
        ++smaller_after;
      }
    }
    index += smaller_after * num_orders(m - 1 - i);
  }
  return index;
}

std::string order_to_string(const LinearOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += '>';
    out += std::to_string(order[i]);
  }
  return out;
}

}  // namespace votepriv
