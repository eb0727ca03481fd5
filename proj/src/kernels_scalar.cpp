// Copyright 2026 The sieved-ops Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstddef>

#include "sieved/kernels.hpp"

namespace sieved::kernels::scalar {

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * xs[i] + coeffs[j];
    out[i] = acc;
  }
}

void recurrence(std::span<const double> gamma, std::span<const double> xs,
                std::span<double> value, std::span<double> deriv) {
  const std::size_t n = gamma.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    double p_prev = 0.0, p = 1.0;
    double d_prev = 0.0, d = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      const double g = m == 0 ? 0.0 : gamma[m];
      const double p_next = x * p - g * p_prev;
      const double d_next = (x * d + p) - g * d_prev;
      p_prev = p;
      p = p_next;
      d_prev = d;
      d = d_next;
    }
    value[i] = p;
    deriv[i] = d;
  }
}

void inverse_sums(std::span<const double> at, std::span<const double> src, bool skip_diagonal,
                  std::span<double> s1, std::span<double> s2) {
  for (std::size_t v = 0; v < at.size(); ++v) {
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (skip_diagonal && i == v) continue;
      const double r = 1.0 / (at[v] - src[i]);
      a += r;
      b += r * r;
    }
    s1[v] = a;
    s2[v] = b;
  }
}

}  // namespace sieved::kernels::scalar
