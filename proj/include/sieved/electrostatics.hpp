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

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "sieved/rational.hpp"

namespace sieved {

/// Unit charges x_1 < ... < x_n (n = kℓ) on [-1, 1]; fixed charges q at ±1
/// and q̃ = 2q - 1/2 at cos(jπ/k), 1 <= j <= k-1.
class ChargeSystem {
 public:
  /// Rejects k < 3, ℓ < 1 and q <= 0. q < 1/4 is accepted but flagged by
  /// `outside_theorem_range` (q̃ < 0 attracts).
  ChargeSystem(int k, int l, Rat q);

  int k() const { return k_; }
  int l() const { return l_; }
  int n() const { return k_ * l_; }
  const Rat& q() const { return q_; }
  Rat q_tilde() const { return q_ * Rat(2) - Rat(1, 2); }
  /// λ = 2q - 1/2 of the matching first-kind family.
  Rat lambda() const { return q_tilde(); }
  bool outside_theorem_range() const { return q_ < Rat(1, 4); }

  /// cos(jπ/k), j = 1..k-1 (descending).
  const std::vector<double>& interior() const { return interior_; }
  /// -1, the interior abscissae ascending, 1.
  const std::vector<double>& partition() const { return partition_; }

 private:
  int k_;
  int l_;
  Rat q_;
  std::vector<double> interior_;
  std::vector<double> partition_;
};

struct Configuration {
  std::vector<double> x;
};

/// Inside the open region: n strictly increasing points, ℓ of them strictly
/// inside each partition interval.
bool is_feasible(const ChargeSystem& sys, const Configuration& cfg);

/// The energy, or +infinity when a point sits on ±1 or an interior fixed
/// charge, leaves [-1, 1], or two points coincide. Uses the monic Û_{k-1}.
double energy(const ChargeSystem& sys, const Configuration& cfg);

/// ∂E/∂x_ν. Throws domain_error where the energy is infinite.
Eigen::VectorXd gradient(const ChargeSystem& sys, const Configuration& cfg);
Eigen::MatrixXd hessian(const ChargeSystem& sys, const Configuration& cfg);

bool strictly_diagonally_dominant(const Eigen::MatrixXd& h);

/// ℓ affinely mapped Chebyshev points in each partition interval.
Configuration default_configuration(const ChargeSystem& sys);

/// cfg + uniform noise of the given amplitude, each point kept strictly inside
/// its own partition interval and the order restored.
Configuration perturbed_configuration(const ChargeSystem& sys, const Configuration& cfg,
                                      double amplitude, unsigned long long seed);

struct SolverOptions {
  double tol = 1e-11;
  int max_iterations = 200;
};

struct EquilibriumResult {
  Configuration x_star;
  double energy = 0.0;
  double grad_inf_norm = 0.0;
  bool hessian_pd = false;
  bool diag_dominant = false;
  int iterations = 0;
  bool converged = false;
  /// Converged because the Newton step fell below the resolution of x
  /// while the gradient sat at its rounding floor.
  bool stalled_at_roundoff = false;
};

/// Damped Newton with a backtracking line search that rejects steps leaving
/// the feasible region.
EquilibriumResult solve_equilibrium(const ChargeSystem& sys,
                                    const std::optional<Configuration>& init = std::nullopt,
                                    const SolverOptions& opts = {});

struct CheckOutcome {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct TheoremReport {
  std::vector<double> zeros;
  std::vector<int> interval_counts;
  EquilibriumResult solve;
  std::vector<CheckOutcome> checks;
  bool passed() const;
};

/// Compares the equilibrium against the zeros of the first-kind sieved
/// polynomial with λ = 2q - 1/2 (q > 0 keeps λ > -1/2).
TheoremReport verify_theorem(const ChargeSystem& sys, unsigned long long seed = 0x5EED);

}  // namespace sieved
