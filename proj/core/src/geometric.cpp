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
#include "votepriv/geometric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace votepriv {

FiniteMechanismMatrix::FiniteMechanismMatrix(
    std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw std::invalid_argument("mechanism matrix: no rows");
  }
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) {
      throw std::invalid_argument("mechanism matrix: must be square");
    }
    Rational sum = 0;
    for (const Rational& v : row) {
      if (v < 0) throw std::invalid_argument("mechanism matrix: negative entry");
      sum += v;
    }
    if (sum != 1) {
      throw std::invalid_argument("mechanism matrix: row does not sum to 1");
    }
  }
}

std::string FiniteMechanismMatrix::to_string() const {
  std::string out;
  for (const auto& row : rows_) {
    for (std::size_t r = 0; r < row.size(); ++r) {
      if (r > 0) out += ' ';
      out += to_fraction_string(row[r]);
    }
    out += '\n';
  }
  return out;
}

FiniteMechanismMatrix truncated_geometric(const Rational& alpha, int n) {
  if (alpha <= 0 || alpha >= 1) {
    throw std::invalid_argument(
        "truncated_geometric: need 0 < alpha < 1 (alpha = 1 is the identity, "
        "alpha = 0 the uniform mechanism; both excluded)");
  }
  if (n < 1) throw std::invalid_argument("truncated_geometric: need n >= 1");

  // alpha^d for d = 0..n.
  std::vector<Rational> alpha_pow(static_cast<std::size_t>(n) + 1);
  alpha_pow[0] = 1;
  for (int d = 1; d <= n; ++d) {
    alpha_pow[static_cast<std::size_t>(d)] =
        alpha_pow[static_cast<std::size_t>(d - 1)] * alpha;
  }
  const Rational one_plus = 1 + alpha;
  const Rational interior_scale = (1 - alpha) / one_plus;

  std::vector<std::vector<Rational>> rows(
      static_cast<std::size_t>(n) + 1,
      std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  for (int i = 0; i <= n; ++i) {
    for (int r = 0; r <= n; ++r) {
      const int d = std::abs(i - r);
      if (r == 0) {
        // All geometric mass at or below 0 lands here: alpha^i / (1+alpha).
        rows[static_cast<std::size_t>(i)][0] =
            alpha_pow[static_cast<std::size_t>(i)] / one_plus;
      } else if (r == n) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] =
            alpha_pow[static_cast<std::size_t>(n - i)] / one_plus;
      } else {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
            interior_scale * alpha_pow[static_cast<std::size_t>(d)];
      }
    }
  }
  return FiniteMechanismMatrix(std::move(rows));
}

Rational exact_dp_ratio(const FiniteMechanismMatrix& mx) {
  Rational best = 1;
  for (int i = 0; i + 1 < mx.size(); ++i) {
    for (int r = 0; r < mx.size(); ++r) {
      const Rational& a = mx.at(i, r);
      const Rational& b = mx.at(i + 1, r);
      if (a == 0 && b == 0) continue;
      if (a == 0 || b == 0) {
        throw std::domain_error(
            "exact_dp_ratio: zero probability opposite a positive one; "
            "epsilon is unbounded");
      }
      Rational ratio = a > b ? a / b : b / a;
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

Rational utility(const FiniteMechanismMatrix& mx, const Rational& gamma) {
  if (gamma < 0) throw std::invalid_argument("utility: gamma must be >= 0");
  Rational total = 0;
  for (int i = 0; i < mx.size(); ++i) {
    for (int r = 0; r < mx.size(); ++r) {
      if (r == i) continue;
      total += mx.at(i, r) * (1 + gamma * std::abs(i - r));
    }
  }
  return -total / mx.size();
}

}  // namespace votepriv
