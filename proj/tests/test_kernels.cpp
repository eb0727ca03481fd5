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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "sieved/kernels.hpp"

using namespace sieved::kernels;

namespace {

std::vector<double> uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar reference kernels") {
  std::vector<double> out(3);
  const std::vector<double> xs{0.0, 0.5, -2.0};
  scalar::horner(std::vector<double>{1.0, -3.0, 2.0}, xs, out);
  CHECK(out == std::vector<double>{1.0, 0.0, 15.0});

  // Monic Chebyshev U: gamma = 1/4 after the first step.
  std::vector<double> val(3), der(3);
  scalar::recurrence(std::vector<double>{0.0, 0.25, 0.25}, xs, val, der);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    CHECK(val[i] == doctest::Approx(x * x * x - 0.5 * x));
    CHECK(der[i] == doctest::Approx(3 * x * x - 0.5));
  }

  std::vector<double> s1(2), s2(2);
  scalar::inverse_sums(std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, 1.0}, true, s1, s2);
  CHECK(s1 == std::vector<double>{-1.0, 1.0});
  CHECK(s2 == std::vector<double>{1.0, 1.0});
}

TEST_CASE("dispatch selection") {
  const Isa before = active_isa();
  CHECK(set_active_isa(Isa::scalar) == Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  const Isa got = set_active_isa(Isa::avx2);
  CHECK(got == (avx2_available() ? Isa::avx2 : Isa::scalar));
  set_active_isa(before);
  CHECK(to_string(Isa::avx2) == "avx2");
  std::vector<double> out(1);
  CHECK_THROWS(horner(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}, out));
}

#ifdef SIEVED_HAVE_AVX2
TEST_CASE("avx2 horner and recurrence match scalar bit for bit") {
  if (!avx2_available()) return;
  std::mt19937_64 rng(0x5EED);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 256u, 1001u}) {
    const auto xs = uniform(rng, n, -1.2, 1.2);
    for (std::size_t deg : {0u, 1u, 7u, 40u}) {
      const auto c = uniform(rng, deg + 1, -3.0, 3.0);
      std::vector<double> a(n), b(n);
      scalar::horner(c, xs, a);
      avx2::horner(c, xs, b);
      CHECK(bitwise_equal(a, b));

      const auto g = uniform(rng, deg + 1, 0.05, 0.5);
      std::vector<double> va(n), da(n), vb(n), db(n);
      scalar::recurrence(g, xs, va, da);
      avx2::recurrence(g, xs, vb, db);
      CHECK(bitwise_equal(va, vb));
      CHECK(bitwise_equal(da, db));
    }
  }
}

TEST_CASE("avx2 inverse sums agree with scalar to rounding") {
  if (!avx2_available()) return;
  std::mt19937_64 rng(0x5EED);
  for (std::size_t n : {1u, 2u, 5u, 8u, 13u, 64u, 129u}) {
    auto at = uniform(rng, n, -0.99, 0.99);
    const auto fixed = uniform(rng, 7, -1.0, 1.0);
    for (bool self : {true, false}) {
      const auto& src = self ? at : fixed;
      std::vector<double> a1(n), a2(n), b1(n), b2(n);
      scalar::inverse_sums(at, src, self, a1, a2);
      avx2::inverse_sums(at, src, self, b1, b2);
      for (std::size_t i = 0; i < n; ++i) {
        double scale1 = 0.0, scale2 = 0.0;
        for (std::size_t j = 0; j < src.size(); ++j) {
          if (self && j == i) continue;
          scale1 += 1.0 / std::abs(at[i] - src[j]);
          scale2 += 1.0 / ((at[i] - src[j]) * (at[i] - src[j]));
        }
        CHECK(std::abs(a1[i] - b1[i]) <= 1e-14 * scale1);
        CHECK(std::abs(a2[i] - b2[i]) <= 1e-14 * scale2);
      }
    }
  }
}
#endif
