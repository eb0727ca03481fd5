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

#include "helpers.hpp"
#include "sieved/recurrence.hpp"

using namespace sieved;
using sieved::test::P;
using sieved::test::R;

namespace {

const Rat kLambdas[] = {R(1, 2), R(3, 2), R(2), R(-1, 4)};

RatPoly even_poly(std::initializer_list<Rat> by_even_power) {
  std::vector<Rat> c;
  for (const auto& v : by_even_power) {
    c.push_back(v);
    c.push_back(R(0));
  }
  c.pop_back();
  return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(SievedFamily(Kind::First, R(1), 2), Error);
  CHECK_THROWS_AS(SievedFamily(Kind::First, R(-1, 2), 3), Error);
  CHECK_THROWS_AS(SievedFamily(Kind::Second, R(-3), 3), Error);
  CHECK_NOTHROW(SievedFamily(Kind::Second, R(-7, 6), 3));
  CHECK_NOTHROW(SievedFamily(Kind::First, R(0), 3));
  try {
    SievedFamily(Kind::First, R(-1), 4);
    FAIL("expected regularity violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::regularity_violation);
  }
  CHECK(parse_kind("second") == Kind::Second);
  CHECK_THROWS_AS(parse_kind("third"), Error);
}

TEST_CASE("block coefficient examples") {
  const SievedFamily c(Kind::First, R(3, 2), 5);
  CHECK(block_coeff(c, 1, 0).a == R(1, 10));
  CHECK(block_coeff(c, 1, 1).a == R(4, 10));
  CHECK(block_coeff(c, 3, 3).a == R(1, 4));
  const SievedFamily b(Kind::Second, R(1, 2), 5);
  CHECK(block_coeff(b, 0, 4).a == R(1, 3));
  CHECK(block_coeff(b, 1, 0).a == R(1, 6));
  CHECK(block_coeff(b, 0, 0).a == R(1));
  for (int n = 0; n < 4; ++n) {
    for (int j = 0; j < 5; ++j) {
      CHECK(block_coeff(c, n, j).b == R(0));
      CHECK(block_coeff(b, n, j).b == R(0));
    }
  }
  CHECK(block_coeff(SievedFamily(Kind::First, R(0), 3), 0, 1).a == R(1, 2));
  CHECK_THROWS_AS(block_coeff(c, 0, 5), Error);
  CHECK(block_a(c, 0, 5 + 1) == block_coeff(c, 1, 1).a);
  CHECK(recurrence_gamma(c, 6) == block_coeff(c, 1, 1).a);
}

TEST_CASE("first kind, lambda 3/2, k 5, degree 10") {
  const SievedFamily fam(Kind::First, R(3, 2), 5);
  const RatPoly monic = even_poly({R(-1, 1280), R(25, 256), R(-25, 32), R(35, 16), R(-5, 2), R(1)});
  CHECK(sieved_monic(fam, 10) == monic);
  CHECK(monic_normalizer(fam, 10).value == R(1, 320));
  CHECK(sieved_classical(fam, 10) == even_poly({R(-1, 4), R(125, 4), R(-250), R(700), R(-800), R(320)}));
}

TEST_CASE("second kind, lambda 1/2, k 5, degree 14") {
  const SievedFamily fam(Kind::Second, R(1, 2), 5);
  CHECK(monic_normalizer(fam, 14).value == R(1, 30720));
  CHECK(sieved_classical(fam, 14) ==
        even_poly({R(-3, 2), R(411, 2), R(-3774), R(25200), R(-79200), R(126720), R(-99840), R(30720)}));
}

TEST_CASE("lambda 0 first kind is Chebyshev T") {
  const SievedFamily fam(Kind::First, R(0), 3);
  CHECK(sieved_monic(fam, 6) == monic_chebyshev(ChebKind::FirstKind, 6));
  CHECK(sieved_monic(fam, 0) == RatPoly::constant(R(1)));
}

TEST_CASE("ultraspherical examples") {
  CHECK(ultraspherical(R(5, 3), 1) == P({R(0), R(10, 3)}));
  CHECK(ultraspherical(R(0), 3) == P({R(0), R(-3), R(0), R(4)}));
  CHECK(ultraspherical(R(3, 2), 2) == P({R(-3, 2), R(0), R(15, 2)}));
  CHECK_THROWS_AS(ultraspherical(R(-1), 2), Error);
}

TEST_CASE("mapped q examples") {
  CHECK(mapped_q(SievedFamily(Kind::First, R(3, 2), 5), 0) == RatPoly::constant(R(1)));
  CHECK(mapped_q(SievedFamily(Kind::First, R(3, 2), 5), 1) == RatPoly::x());
  const SievedFamily b(Kind::Second, R(1, 2), 3);
  CHECK(mapped_s(b, 1) == R(1, 80));
  CHECK(mapped_q(b, 2) == P({R(-1, 80), R(0), R(1)}));
}

TEST_CASE("mapped q is an affinely scaled Gegenbauer polynomial") {
  for (auto kind : {Kind::First, Kind::Second}) {
    for (int k = 3; k <= 5; ++k) {
      for (const auto& lam : {R(1, 2), R(3, 2), R(2)}) {
        const SievedFamily fam(kind, lam, k);
        const Rat mu = kind == Kind::First ? lam : lam + R(1);
        for (int n = 0; n <= 4; ++n) {
          const RatPoly scaled = compose(ultraspherical(mu, n), RatPoly{R(0), pow(R(2), k - 1)});
          const Rat factor = factorial(n) / (pow(R(2), k * n) * rising_factorial(mu, n));
          CHECK(mapped_q(fam, n) == scaled * factor);
        }
      }
    }
  }
}

TEST_CASE("delta examples and conventions") {
  for (int k = 3; k <= 6; ++k) {
    const SievedFamily c(Kind::First, R(3, 2), k);
    const SievedFamily b(Kind::Second, R(3, 2), k);
    for (int n = 0; n <= 2; ++n) {
      for (int j = 0; j <= k - 1; ++j) {
        CHECK(delta(c, n, 2, j) == monic_chebyshev(ChebKind::SecondKind, j));
        if (j <= k - 2) CHECK(delta(b, n, j + 2, k - 2) == monic_chebyshev(ChebKind::SecondKind, k - j - 2));
      }
      CHECK(delta(c, n, 4, 2) == RatPoly::constant(R(1)));
      CHECK(delta(c, n, 5, 2).is_zero());
      for (int i = 1; i <= k; ++i) {
        for (int j = i - 2; j <= k; ++j) {
          CHECK(delta(c, n, k + i, k + j) == delta(c, n + 1, i, j));
          CHECK(delta(b, n, k + i, k + j) == delta(b, n + 1, i, j));
        }
      }
    }
  }
}

TEST_CASE("pi_k equals T_k") {
  for (int k = 3; k <= 16; ++k) {
    const RatPoly t = monic_chebyshev(ChebKind::FirstKind, k);
    const RatPoly u = monic_chebyshev(ChebKind::SecondKind, k) - monic_chebyshev(ChebKind::SecondKind, k - 2) * R(1, 4);
    CHECK(u == t);
    for (auto kind : {Kind::First, Kind::Second}) {
      const MappingPolys mp = mapping_polys(SievedFamily(kind, R(3, 2), k));
      CHECK(mp.pi == t);
    }
  }
}

TEST_CASE("mapping residuals vanish") {
  for (auto kind : {Kind::First, Kind::Second}) {
    for (int k = 3; k <= 6; ++k) {
      for (const auto& lam : kLambdas) {
        const SievedFamily fam(kind, lam, k);
        const SievedData data(fam, 5 * k + 2);
        const MappingPolys mp = mapping_polys(fam);
        for (int n = 0; n <= 4; ++n) {
          const int lo = kind == Kind::First ? 1 : 0;
          const int hi = kind == Kind::First ? k : k - 1;
          for (int j = lo; j <= hi; ++j) CHECK(mapping_residual(data, n, j).is_zero());
          for (int j = 0; j <= k - 1 && n * k + mp.m + j + 1 <= data.max_n(); ++j) {
            CHECK(mapping_residual_generic(data, mp, n, j).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("mapping edge cases") {
  const SievedFamily c(Kind::First, R(3, 2), 4);
  const SievedData data(c, 30);
  for (int n = 0; n <= 5; ++n) CHECK(data.p(n * 4) == data.q_of_tk(n));
  const SievedFamily b(Kind::Second, R(1, 2), 4);
  const SievedData bd(b, 30);
  for (int n = 0; n <= 5; ++n) {
    CHECK(bd.p(n * 4 + 3) == monic_chebyshev(ChebKind::SecondKind, 3) * bd.q_of_tk(n));
  }
  CHECK_THROWS_AS(mapping_residual(data, 0, 0), Error);
  CHECK_THROWS_AS(mapping_residual(bd, 0, 4), Error);
}

TEST_CASE("sequence shape: monic, exact degree, parity") {
  for (auto kind : {Kind::First, Kind::Second}) {
    for (const auto& lam : kLambdas) {
      const auto seq = sieved_sequence(SievedFamily(kind, lam, 4), 20);
      for (int N = 0; N <= 20; ++N) {
        const RatPoly& p = seq[static_cast<std::size_t>(N)];
        CHECK(p.degree() == N);
        CHECK(p.leading() == R(1));
        CHECK(compose(p, P({R(0), R(-1)})) == p * (N % 2 == 0 ? R(1) : R(-1)));
      }
    }
  }
}

TEST_CASE("zero sharing between the two kinds") {
  for (int k = 3; k <= 5; ++k) {
    for (const auto& lam : {R(1), R(3, 2), R(2)}) {
      for (int l = 1; l <= 2; ++l) {
        const int n = k * l;
        const RatPoly b = sieved_monic(SievedFamily(Kind::Second, lam - R(1), k), n + k - 1);
        const RatPoly c = sieved_monic(SievedFamily(Kind::First, lam, k), n);
        CHECK(divide_exact(b, monic_chebyshev(ChebKind::SecondKind, k - 1)) == c);
      }
    }
  }
}

TEST_CASE("normalisation names") {
  CHECK(parse_normalization("classical") == Normalization::classical);
  CHECK(to_string(Normalization::monic) == "monic");
  CHECK_THROWS_AS(parse_normalization("other"), Error);
}
