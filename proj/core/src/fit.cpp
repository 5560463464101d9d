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
#include "votepriv/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "votepriv/rational.hpp"

namespace votepriv {

std::string FitResult::render() const {
  return "delta(n) = 1/sqrt(" + format_double(a) + "*n + " + format_double(b) +
         ")";
}

FitResult fit_inverse_sqrt(const std::vector<std::pair<int, double>>& samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("fit_inverse_sqrt: need at least 2 samples");
  }
  const double count = static_cast<double>(samples.size());
  double mean_x = 0;
  double mean_y = 0;
  for (const auto& [n, delta] : samples) {
    if (delta <= 0) {
      throw std::invalid_argument("fit_inverse_sqrt: delta samples must be > 0");
    }
    mean_x += n;
    mean_y += 1.0 / (delta * delta);
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0;
  double sxy = 0;
  for (const auto& [n, delta] : samples) {
    const double dx = n - mean_x;
    sxx += dx * dx;
    sxy += dx * (1.0 / (delta * delta) - mean_y);
  }
  if (sxx == 0) {
    throw std::invalid_argument("fit_inverse_sqrt: samples need distinct n");
  }

  FitResult out;
  out.a = sxy / sxx;
  out.b = mean_y - out.a * mean_x;
  out.n_min = std::min_element(samples.begin(), samples.end())->first;
  out.n_max = std::max_element(samples.begin(), samples.end())->first;

  for (const auto& [n, delta] : samples) {
    const double y = out.a * n + out.b;
    const double y_actual = 1.0 / (delta * delta);
    out.mse_inverse_square += (y_actual - y) * (y_actual - y);
    if (y > 0) {
      const double fitted = 1.0 / std::sqrt(y);
      out.mse += (delta - fitted) * (delta - fitted);
    } else {
      // The fitted curve is undefined here; count the full sample value.
      out.mse += delta * delta;
    }
  }
  out.mse /= count;
  out.mse_inverse_square /= count;
  return out;
}

}  // namespace votepriv
