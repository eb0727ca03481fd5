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
#include "sieved/plot.hpp"
#include "sieved/recurrence.hpp"

using namespace sieved;
using sieved::test::P;
using sieved::test::R;

TEST_CASE("polynomial spec parsing") {
  CHECK(parse_poly_spec("u:4").poly == P({R(1), R(0), R(-12), R(0), R(16)}));
  CHECK(parse_poly_spec("t:2").poly == P({R(-1), R(0), R(2)}));
  const SievedFamily b(Kind::Second, R(1, 2), 5);
  CHECK(parse_poly_spec("second:1/2:5:14").poly == sieved_monic(b, 14));
  CHECK(parse_poly_spec("second:1/2:5:14:classical").poly == sieved_classical(b, 14));
  for (const char* bad : {"", "v:3", "u:x", "u:-1", "first:1/2:5", "first:1/2:2:4", "first:1/2:5:4:scaled"}) {
    CHECK_THROWS_AS(parse_poly_spec(bad), Error);
  }
}

TEST_CASE("sampling and CSV round trip") {
  const auto xs = sample_points(5, {-1.0, 1.0});
  CHECK(xs == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK_THROWS_AS(sample_points(1), Error);
  CHECK(shortest(0.1) == "0.1");
  CHECK(shortest(-1.1) == "-1.1");
  CHECK(shortest(1e-300) == "1e-300");

  const RatPoly f = P({R(-1, 3), R(0), R(7, 5)});
  const auto rows = parse_plot_csv(plot_csv(f, 37));
  REQUIRE(rows.size() == 37);
  for (const auto& [x, y] : rows) CHECK(y == evaluate_exact(f, x).to_double());
  CHECK_THROWS_AS(parse_plot_csv("a,b\n1,2\n"), Error);
  CHECK_THROWS_AS(parse_plot_csv("x,y\n1;2\n"), Error);
  CHECK_THROWS_AS(parse_plot_csv("x,y\n1,z\n"), Error);
}
