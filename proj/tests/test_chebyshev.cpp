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

#include "helpers.hpp"
#include "sieved/chebyshev.hpp"

using namespace sieved;
using sieved::test::P;
using sieved::test::R;

TEST_CASE("monic Chebyshev examples") {
  CHECK(monic_chebyshev(ChebKind::SecondKind, 4) == P({R(1, 16), R(0), R(-3, 4), R(0), R(1)}));
  CHECK(monic_chebyshev(ChebKind::SecondKind, -1).is_zero());
  CHECK(monic_chebyshev(ChebKind::FirstKind, 3) == P({R(0), R(-3, 4), R(0), R(1)}));
  CHECK(monic_chebyshev(ChebKind::FirstKind, 0) == RatPoly::constant(R(1)));
  CHECK_THROWS_AS(monic_chebyshev(ChebKind::SecondKind, -2), Error);
  CHECK_THROWS_AS(monic_chebyshev(ChebKind::FirstKind, -1), Error);
}

TEST_CASE("classical U4 matches the plotted coefficients") {
  CHECK(classical_chebyshev(ChebKind::SecondKind, 4) == P({R(1), R(0), R(-12), R(0), R(16)}));
  CHECK(classical_chebyshev(ChebKind::FirstKind, 3) == P({R(0), R(-3), R(0), R(4)}));
}

TEST_CASE("identity examples") {
  CHECK(identity_residual(IdentityTag::pythagorean, 4).is_zero());
  CHECK(identity_residual(IdentityTag::product_diff, 2, 2).is_zero());
  CHECK(identity_residual(IdentityTag::deriv, 1).is_zero());
  CHECK_THROWS_AS(identity_residual(IdentityTag::product_diff, 2), Error);
  CHECK_THROWS_AS(identity_residual(IdentityTag::turan, 0), Error);
  CHECK(parse_identity_tag("turan") == IdentityTag::turan);
  CHECK_THROWS_AS(parse_identity_tag("nope"), Error);
}

TEST_CASE("identities hold on a range of indices") {
  const ChebyshevTable tab(40);
  for (auto tag : kAllIdentityTags) {
    for (int n = 1; n <= 30; ++n) {
      if (tag == IdentityTag::product_diff) {
        for (int m = 0; m <= 30; m += 3) CHECK(identity_residual(tab, tag, n, m).is_zero());
      } else {
        CHECK(identity_residual(tab, tag, n).is_zero());
      }
    }
  }
}

TEST_CASE("float evaluation of T_n at cos θ") {
  for (int n = 1; n <= 20; ++n) {
    const RealPoly t = to_real(monic_chebyshev(ChebKind::FirstKind, n));
    for (double th : {0.1, 0.7, 1.3, 2.9}) {
      CHECK(std::abs(t.evaluate(std::cos(th)) - std::ldexp(std::cos(n * th), 1 - n)) < 1e-12);
    }
  }
}

TEST_CASE("U_{k-1} and T_k are coprime") {
  for (int k = 3; k <= 16; ++k) {
    const RatPoly g = gcd(monic_chebyshev(ChebKind::SecondKind, k - 1), monic_chebyshev(ChebKind::FirstKind, k));
    CHECK(g.degree() == 0);
  }
}

TEST_CASE("table returns zero below index zero") {
  const ChebyshevTable tab(5);
  CHECK(tab.u(-1).is_zero());
  CHECK(tab.u(-3).is_zero());
  CHECK_THROWS_AS(tab.u(6), Error);
  CHECK_THROWS_AS(tab.t(-1), Error);
}
