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

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "sieved/electrostatics.hpp"
#include "sieved/numerics.hpp"

using namespace sieved;
using sieved::test::R;

namespace {

Configuration reflected(const Configuration& c) {
  Configuration r;
  for (auto it = c.x.rbegin(); it != c.x.rend(); ++it) r.x.push_back(-*it);
  return r;
}

std::vector<double> first_kind_zeros(const ChargeSystem& sys) {
  return zeros(SievedFamily(Kind::First, sys.lambda(), sys.k()), sys.n()).values;
}

}  // namespace

TEST_CASE("charge system validation") {
  const ChargeSystem sys(5, 2, R(1));
  CHECK(sys.n() == 10);
  CHECK(sys.lambda() == R(3, 2));
  CHECK(sys.q_tilde() == R(3, 2));
  CHECK(sys.interior().size() == 4);
  CHECK(sys.partition().front() == -1.0);
  CHECK_FALSE(sys.outside_theorem_range());
  CHECK(ChargeSystem(3, 1, R(1, 8)).outside_theorem_range());
  CHECK_THROWS_AS(ChargeSystem(3, 1, R(0)), Error);
  CHECK_THROWS_AS(ChargeSystem(2, 1, R(1)), Error);
  CHECK_THROWS_AS(ChargeSystem(3, 0, R(1)), Error);
}

TEST_CASE("energy examples") {
  const ChargeSystem sys(5, 2, R(1));
  Configuration cfg = default_configuration(sys);
  CHECK(is_feasible(sys, cfg));
  CHECK(std::isfinite(energy(sys, cfg)));
  CHECK(energy(sys, cfg) == doctest::Approx(energy(sys, reflected(cfg))).epsilon(1e-14));
  Configuration touch = cfg;
  touch.x[1] = sys.interior().back();
  CHECK(std::isinf(energy(sys, touch)));
  touch = cfg;
  touch.x[0] = -1.0;
  CHECK(std::isinf(energy(sys, touch)));
  touch = cfg;
  touch.x[3] = touch.x[2];
  CHECK(std::isinf(energy(sys, touch)));
  CHECK_THROWS_AS(gradient(sys, touch), Error);
  CHECK_THROWS_AS(hessian(sys, touch), Error);

  const Configuration at_zeros{first_kind_zeros(sys)};
  const double e0 = energy(sys, at_zeros);
  CHECK(std::isfinite(e0));
  CHECK(e0 == doctest::Approx(energy(sys, default_configuration(sys))).epsilon(0.5));
}

TEST_CASE("gradient examples") {
  const ChargeSystem sys(5, 2, R(1));
  const Configuration cfg = default_configuration(sys);
  const Eigen::VectorXd g = gradient(sys, cfg);
  const Eigen::VectorXd gr = gradient(sys, reflected(cfg));
  for (Eigen::Index v = 0; v < g.size(); ++v) CHECK(gr[g.size() - 1 - v] == doctest::Approx(-g[v]).epsilon(1e-12));

  const double h = 1e-6;
  for (std::size_t v = 0; v < cfg.x.size(); ++v) {
    Configuration up = cfg, dn = cfg;
    up.x[v] += h;
    dn.x[v] -= h;
    const double fd = (energy(sys, up) - energy(sys, dn)) / (2 * h);
    CHECK(std::abs(fd - g[static_cast<Eigen::Index>(v)]) <= 1e-5 * std::max(1.0, std::abs(g[static_cast<Eigen::Index>(v)])));
  }
  const Configuration at_zeros{first_kind_zeros(sys)};
  CHECK(gradient(sys, at_zeros).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("hessian examples") {
  const ChargeSystem sys(4, 3, R(3, 4));
  std::mt19937_64 rng(0x5EED);
  const Configuration base = default_configuration(sys);
  for (int trial = 0; trial < 10; ++trial) {
    const Configuration cfg = perturbed_configuration(sys, base, 0.05, rng());
    REQUIRE(is_feasible(sys, cfg));
    const Eigen::MatrixXd hm = hessian(sys, cfg);
    CHECK((hm - hm.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(strictly_diagonally_dominant(hm));
    CHECK(hm.diagonal().minCoeff() > 0.0);
    const double h = 1e-6;
    for (std::size_t v = 0; v < cfg.x.size(); ++v) {
      Configuration up = cfg, dn = cfg;
      up.x[v] += h;
      dn.x[v] -= h;
      const Eigen::VectorXd col = (gradient(sys, up) - gradient(sys, dn)) / (2 * h);
      const double scale = hm.col(static_cast<Eigen::Index>(v)).cwiseAbs().maxCoeff();
      CHECK((col - hm.col(static_cast<Eigen::Index>(v))).cwiseAbs().maxCoeff() <= 1e-4 * scale);
    }
  }
}

TEST_CASE("solver examples") {
  {
    const ChargeSystem sys(5, 2, R(1));
    const auto z = first_kind_zeros(sys);
    const EquilibriumResult res = solve_equilibrium(sys);
    CHECK(res.converged);
    CHECK(res.hessian_pd);
    CHECK(res.diag_dominant);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(res.x_star.x[i] - z[i]) < 1e-10);
    const EquilibriumResult pert = solve_equilibrium(sys, perturbed_configuration(sys, Configuration{z}, 1e-2, 0x5EED));
    CHECK(pert.converged);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(pert.x_star.x[i] - z[i]) < 1e-10);
  }
  {
    const ChargeSystem sys(3, 1, R(1, 4));
    CHECK(sys.q_tilde() == R(0));
    const auto z = first_kind_zeros(sys);
    const EquilibriumResult res = solve_equilibrium(sys);
    CHECK(res.converged);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(res.x_star.x[i] - z[i]) < 1e-10);
  }
  CHECK_THROWS_AS(solve_equilibrium(ChargeSystem(3, 1, R(1)), Configuration{{0.1, 0.2, 0.3}}), Error);
}

TEST_CASE("equilibrium is a local minimum") {
  const ChargeSystem sys(4, 2, R(1, 2));
  const EquilibriumResult res = solve_equilibrium(sys);
  REQUIRE(res.converged);
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 100; ++trial) {
    const Configuration c = perturbed_configuration(sys, res.x_star, 1e-3, rng());
    if (c.x == res.x_star.x) continue;
    CHECK(energy(sys, res.x_star) < energy(sys, c));
  }
}

TEST_CASE("theorem verification examples") {
  for (const auto& [k, l, q] : {std::tuple{5, 2, R(1)}, std::tuple{3, 3, R(3, 4)}, std::tuple{4, 1, R(1, 4)}}) {
    const TheoremReport rep = verify_theorem(ChargeSystem(k, l, q));
    for (const auto& c : rep.checks) {
      INFO(c.name << " value=" << c.value << " tol=" << c.tolerance);
      CHECK(c.passed);
    }
    CHECK(rep.passed());
    CHECK(rep.interval_counts == std::vector<int>(static_cast<std::size_t>(k), l));
  }
}

TEST_CASE("attractive interior charges are accepted without a claim") {
  const ChargeSystem sys(3, 1, R(1, 8));
  CHECK(sys.q_tilde() < R(0));
  const EquilibriumResult res = solve_equilibrium(sys);
  CHECK(res.x_star.x.size() == 3);
}
