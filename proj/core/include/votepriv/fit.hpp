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
#ifndef VOTEPRIV_FIT_HPP_
#define VOTEPRIV_FIT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace votepriv {

// Least-squares fit of delta(n) = 1/sqrt(a n + b).
struct FitResult {
  double a = 0;
  double b = 0;
  // Mean square error between the delta samples and 1/sqrt(a n + b).
  double mse = 0;
  // Mean square residual of the underlying linear regression of
  // y = delta^-2 against n (the space the fit is computed in).
  double mse_inverse_square = 0;
  int n_min = 0;
  int n_max = 0;

  // "delta(n) = 1/sqrt(a*n + b)" with the fitted constants.
  std::string render() const;
};

// Ordinary least squares of delta^-2 against n. Requires >= 2 samples with
// distinct n and every delta > 0; throws std::invalid_argument otherwise.
FitResult fit_inverse_sqrt(const std::vector<std::pair<int, double>>& samples);

}  // namespace votepriv

#endif  // VOTEPRIV_FIT_HPP_
