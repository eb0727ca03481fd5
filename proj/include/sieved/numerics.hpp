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

#include <vector>

#include "sieved/recurrence.hpp"

namespace sieved {

/// Zeros of the monic p_n of a family, sorted ascending.
struct ZeroSet {
  std::vector<double> values;
  SievedFamily family;
  int n;
};

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
/// and off-diagonal (implicit QL with Wilkinson shifts), sorted ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag);

/// γ_1..γ_{n-1} of the flattened recurrence as doubles, stored at index
/// 1..n-1 of the returned vector (index 0 unused), ready for
/// kernels::recurrence.
std::vector<double> gamma_table(const SievedFamily& fam, int n);

/// Zeros via the Jacobi matrix (diagonal 0, off-diagonal sqrt(γ_i)),
/// refined by Newton steps on the recurrence. Requires λ > -1/2.
ZeroSet zeros(const SievedFamily& fam, int n);

/// Orthogonality weight: first kind (1-x²)^{λ-1/2}|U_{k-1}(x)|^{2λ},
/// second kind (1-x²)^{λ+1/2}|U_{k-1}(x)|^{2λ}. Requires |x| < 1, λ > -1/2.
double weight(const SievedFamily& fam, double x);

struct OrthogonalityResult {
  double defect;
  /// |defect(panels) - defect(2 panels)|.
  double refinement_change;
  bool converged;
};

/// |∫p_m p_n w| / sqrt(∫p_m² w ∫p_n² w) after x = cos θ, integrating with
/// composite Gauss-Legendre panels on each [jπ/k, (j+1)π/k]. When 2λ is not
/// an even integer the end panels are graded geometrically toward the
/// singular points jπ/k.
OrthogonalityResult orthogonality_defect(const SievedFamily& fam, int m, int n,
                                         int panels_per_piece = 4);

/// Abscissae -1 < cos((k-1)π/k) < ... < cos(π/k) < 1.
std::vector<double> partition_points(int k);

/// Number of zeros strictly inside each of the k partition intervals.
/// Needs k | n; throws degenerate_configuration when a zero lies within
/// 1e-12 of a partition point.
std::vector<int> interval_counts(const ZeroSet& z);

}  // namespace sieved
