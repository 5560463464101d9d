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
#ifndef VOTEPRIV_DISTRIBUTION_HPP_
#define VOTEPRIV_DISTRIBUTION_HPP_

#include <string>
#include <vector>

#include "votepriv/rational.hpp"

namespace votepriv {

// Row distribution pi = (p_1, ..., p_c) of an i.i.d. database over c values.
// Probabilities are exact rationals summing to exactly 1. Zero entries are
// allowed (needed for boundary cases); delta computations additionally
// require at least two supported values and enforce that at their entry
// points.
class VoteDistribution {
 public:
  explicit VoteDistribution(std::vector<Rational> probs);
  static VoteDistribution uniform(int c);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const {
    return probs_[static_cast<std::size_t>(i)];
  }
  const std::vector<Rational>& probs() const { return probs_; }

  bool supported(int i) const {
    return probs_[static_cast<std::size_t>(i)] > 0;
  }
  int support_size() const;

  // min_i p_i over all bins (the histogram-mechanism epsilon threshold uses
  // this form).
  Rational min_single() const;
  // min_{i != j} (p_i + p_j) (the c-bin exact-delta rate uses this form).
  Rational min_pair() const;

  // Common-denominator view: p_i == scaled_num()[i] / common_den(). The
  // fast delta engine accumulates conditional masses over this denominator.
  const BigInt& common_den() const { return den_; }
  const std::vector<BigInt>& scaled_num() const { return num_; }

  std::string to_string() const;  // comma-joined "num/den" entries

 private:
  std::vector<Rational> probs_;
  std::vector<BigInt> num_;
  BigInt den_;
};

}  // namespace votepriv

#endif  // VOTEPRIV_DISTRIBUTION_HPP_
