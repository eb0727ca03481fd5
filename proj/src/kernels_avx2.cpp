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

// Built with -mavx2 (and without -mfma) so each lane repeats the scalar
// operation sequence exactly.
#include <immintrin.h>

#include <cstddef>

#include "sieved/kernels.hpp"

namespace sieved::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void accumulate(double t, const double* src, std::size_t begin, std::size_t end, double& a, double& b) {
  const __m256d tv = _mm256_set1_pd(t);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d va = _mm256_setzero_pd();
  __m256d vb = _mm256_setzero_pd();
  std::size_t i = begin;
  for (; i + kLanes <= end; i += kLanes) {
    const __m256d r = _mm256_div_pd(one, _mm256_sub_pd(tv, _mm256_loadu_pd(src + i)));
    va = _mm256_add_pd(va, r);
    vb = _mm256_add_pd(vb, _mm256_mul_pd(r, r));
  }
  a += hsum(va);
  b += hsum(vb);
  for (; i < end; ++i) {
    const double r = 1.0 / (t - src[i]);
    a += r;
    b += r * r;
  }
}

}  // namespace

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t count = xs.size();
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[j]));
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  if (i < count) scalar::horner(coeffs, xs.subspan(i), out.subspan(i));
}

void recurrence(std::span<const double> gamma, std::span<const double> xs,
                std::span<double> value, std::span<double> deriv) {
  const std::size_t n = gamma.size();
  const std::size_t count = xs.size();
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d p_prev = _mm256_setzero_pd();
    __m256d p = _mm256_set1_pd(1.0);
    __m256d d_prev = _mm256_setzero_pd();
    __m256d d = _mm256_setzero_pd();
    for (std::size_t m = 0; m < n; ++m) {
      const __m256d g = _mm256_set1_pd(m == 0 ? 0.0 : gamma[m]);
      const __m256d p_next = _mm256_sub_pd(_mm256_mul_pd(x, p), _mm256_mul_pd(g, p_prev));
      const __m256d d_next =
          _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(x, d), p), _mm256_mul_pd(g, d_prev));
      p_prev = p;
      p = p_next;
      d_prev = d;
      d = d_next;
    }
    _mm256_storeu_pd(value.data() + i, p);
    _mm256_storeu_pd(deriv.data() + i, d);
  }
  if (i < count) scalar::recurrence(gamma, xs.subspan(i), value.subspan(i), deriv.subspan(i));
}

void inverse_sums(std::span<const double> at, std::span<const double> src, bool skip_diagonal,
                  std::span<double> s1, std::span<double> s2) {
  for (std::size_t v = 0; v < at.size(); ++v) {
    double a = 0.0, b = 0.0;
    if (skip_diagonal) {
      accumulate(at[v], src.data(), 0, v, a, b);
      accumulate(at[v], src.data(), v + 1, src.size(), a, b);
    } else {
      accumulate(at[v], src.data(), 0, src.size(), a, b);
    }
    s1[v] = a;
    s2[v] = b;
  }
}

}  // namespace sieved::kernels::avx2
