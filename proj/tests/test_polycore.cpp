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
#include <concepts>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "sieved/io.hpp"
#include "sieved/poly.hpp"

using namespace sieved;
using sieved::test::P;
using sieved::test::R;

TEST_CASE("rational parsing and spelling") {
  CHECK(Rat::parse("125/4") == R(125, 4));
  CHECK(Rat::parse("-6/8") == R(-3, 4));
  CHECK(Rat::parse("0.75") == R(3, 4));
  CHECK(Rat::parse("-1e-3") == R(-1, 1000));
  CHECK(Rat::parse("3") == R(3));
  CHECK(R(320).str() == "320");
  CHECK(R(-1, 4).str() == "-1/4");
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("abc"), Error);
  CHECK_THROWS_AS(Rat::parse(""), Error);
  CHECK_THROWS_AS(R(1) / R(0), Error);
}

TEST_CASE("rising factorial and factorial") {
  CHECK(rising_factorial(R(5, 2), 0) == R(1));
  CHECK(rising_factorial(R(5, 2), 2) == R(35, 4));
  CHECK(factorial(5) == R(120));
  CHECK(pow(R(2), -3) == R(1, 8));
}

TEST_CASE("zero polynomial is canonical") {
  RatPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(P({R(0), R(0)}).is_zero());
  CHECK(z.evaluate(R(7)) == R(0));
}

TEST_CASE("arith examples") {
  const RatPoly x2m = P({R(-1, 4), R(0), R(1)});
  CHECK(x2m + RatPoly::constant(R(1, 4)) == RatPoly::monomial(2));
  CHECK(RatPoly::x() * RatPoly::x() == RatPoly::monomial(2));
  const RatPoly u4 = P({R(1), R(0), R(-12), R(0), R(16)});
  CHECK(u4 * R(1, 16) == P({R(1, 16), R(0), R(-3, 4), R(0), R(1)}));
  CHECK((u4 - u4).is_zero());
}

TEST_CASE("evaluate examples") {
  const RatPoly u4 = P({R(1, 16), R(0), R(-3, 4), R(0), R(1)});
  CHECK(std::abs(to_real(u4).evaluate(std::cos(std::numbers::pi / 5))) < 1e-14);
  CHECK(P({R(-1, 4), R(0), R(1)}).evaluate(R(1, 2)) == R(0));
}

TEST_CASE("compose examples") {
  const RatPoly f = P({R(3), R(-1), R(2, 3)});
  const RatPoly t3 = P({R(0), R(-3, 4), R(0), R(1)});
  CHECK(compose(f, RatPoly::x()) == f);
  CHECK(compose(RatPoly::monomial(2), t3) == P({R(0), R(0), R(9, 16), R(0), R(-3, 2), R(0), R(1)}));
  CHECK(compose(RatPoly::constant(R(5, 7)), t3) == RatPoly::constant(R(5, 7)));
  CHECK(compose(f, t3).degree() == 6);
}

TEST_CASE("derivative and wronskian examples") {
  const RatPoly t3 = P({R(0), R(-3, 4), R(0), R(1)});
  CHECK(t3.derivative() == P({R(-3, 4), R(0), R(3)}));
  CHECK(RatPoly{}.derivative().is_zero());
  CHECK(RatPoly::constant(R(4)).derivative().is_zero());
  CHECK(wronskian(t3, t3).is_zero());
  CHECK(wronskian(RatPoly::constant(R(1)), RatPoly::x()) == RatPoly::constant(R(1)));
  CHECK(wronskian(RatPoly::x(), RatPoly::monomial(2)) == RatPoly::monomial(2));
}

TEST_CASE("divide_exact examples") {
  const RatPoly x2m = P({R(-1, 4), R(0), R(1)});
  CHECK(divide_exact(x2m, P({R(-1, 2), R(1)})) == P({R(1, 2), R(1)}));
  CHECK(divide_exact(x2m, RatPoly::constant(R(1))) == x2m);
  try {
    divide_exact(P({R(1), R(0), R(1)}), RatPoly::x());
    FAIL("expected not-divisible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_divisible);
  }
  CHECK_THROWS_AS(divmod(x2m, RatPoly{}), Error);
}

TEST_CASE("gcd is monic") {
  const RatPoly a = P({R(-1, 4), R(0), R(1)}) * P({R(2), R(1)});
  const RatPoly b = P({R(-1, 2), R(1)}) * P({R(3), R(0), R(1)}) * R(7);
  CHECK(gcd(a, b) == P({R(-1, 2), R(1)}));
  CHECK(gcd(a, RatPoly{}) == make_monic(a));
}

TEST_CASE("ring properties on random polynomials") {
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoly f = test::random_poly(rng, 5);
    const RatPoly g = test::random_poly(rng, 5);
    const RatPoly h = test::random_poly(rng, 4);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(wronskian(f, g) == -wronskian(g, f));
    const Rat at(trial - 30, 7);
    CHECK(compose(f, g).evaluate(at) == f.evaluate(g.evaluate(at)));
    if (!g.is_zero()) {
      CHECK(divide_exact(f * g, g) == f);
      const auto [q, r] = divmod(f, g);
      CHECK(q * g + r == f);
      CHECK(r.degree() < g.degree());
    }
  }
}

TEST_CASE("exact evaluation at a binary abscissa") {
  const RatPoly f = P({R(-1, 3), R(0), R(1)});
  CHECK(evaluate_exact(f, 0.5) == R(-1, 12));
  CHECK_THROWS_AS(evaluate_exact(f, std::nan("")), Error);
}

TEST_CASE("scalar kinds do not mix") {
  static_assert(!std::is_invocable_v<std::plus<>, RatPoly, RealPoly>);
  static_assert(!std::is_invocable_v<std::multiplies<>, RatPoly, RealPoly>);
  static_assert(!std::is_constructible_v<RatPoly, RealPoly>);
  CHECK(to_real(P({R(1, 2), R(3)})) == RealPoly{0.5, 3.0});
}

TEST_CASE("json round trip") {
  const RatPoly f = P({R(-1, 4), R(0), R(125, 4), R(320)});
  const Json j = poly_to_json(f);
  CHECK(j.dump() == R"(["-1/4","0","125/4","320"])");
  CHECK(poly_from_json(j) == f);
  CHECK(poly_to_json(RatPoly{}).dump() == "[]");
  CHECK(degree_to_json(RatPoly{}) == "zero");
  CHECK_THROWS_AS(poly_from_json(Json::parse("[1]")), Error);
}
