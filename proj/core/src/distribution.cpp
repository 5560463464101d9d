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
#include "votepriv/distribution.hpp"

#include <stdexcept>

namespace votepriv {

VoteDistribution::VoteDistribution(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("distribution needs at least two values");
  }
  Rational sum = 0;
  for (const Rational& p : probs_) {
    if (p < 0) throw std::invalid_argument("negative probability");
    sum += p;
  }
  if (sum != 1) {
    throw std::invalid_argument("probabilities must sum to exactly 1");
  }
  den_ = 1;
  for (const Rational& p : probs_) {
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), p.get_den().get_mpz_t());
  }
  num_.reserve(probs_.size());
  for (const Rational& p : probs_) {
    num_.push_back(p.get_num() * (den_ / p.get_den()));
  }
}

VoteDistribution VoteDistribution::uniform(int c) {
  if (c < 2) throw std::invalid_argument("uniform distribution needs c >= 2");
  std::vector<Rational> probs(static_cast<std::size_t>(c),
                              make_rational(1, c));
  return VoteDistribution(std::move(probs));
}

int VoteDistribution::support_size() const {
  int count = 0;
  for (const Rational& p : probs_) {
    if (p > 0) ++count;
  }
  return count;
}

Rational VoteDistribution::min_single() const {
  Rational best = probs_[0];
  for (const Rational& p : probs_) {
    if (p < best) best = p;
  }
  return best;
}

Rational VoteDistribution::min_pair() const {
  Rational best;
  bool first = true;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    for (std::size_t j = i + 1; j < probs_.size(); ++j) {
      Rational pair = probs_[i] + probs_[j];
      if (first || pair < best) {
        best = pair;
        first = false;
      }
    }
  }
  return best;
}

std::string VoteDistribution::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (i > 0) out += ',';
    out += to_fraction_string(probs_[i]);
  }
  return out;
}

}  // namespace votepriv
