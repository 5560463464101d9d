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
#ifndef VOTEPRIV_ORDERS_HPP_
#define VOTEPRIV_ORDERS_HPP_

#include <string>
#include <vector>

namespace votepriv {

// A vote: linear order over candidates 0..m-1, ranking[0] = top choice.
using LinearOrder = std::vector<int>;

// m! for small m.
int num_orders(int m);

// The m! linear orders in lexicographic order of their ranking vectors;
// profiles are histograms indexed by this enumeration. Stable across runs.
// m is capped at 5 (m! = 120 bins); larger m makes the histogram universe
// intractable for exact enumeration, so the cap fails fast with an
// explanation.
std::vector<LinearOrder> canonical_orders(int m);

// Position of `order` in canonical_orders(m).
int order_index(const LinearOrder& order);

std::string order_to_string(const LinearOrder& order);  // "0>1>2"

}  // namespace votepriv

#endif  // VOTEPRIV_ORDERS_HPP_
