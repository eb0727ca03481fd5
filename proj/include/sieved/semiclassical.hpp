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

/// Pearson equation D(Φu) = Ψu with the Stieltjes-function data (C, D).
/// Invariant: Ψ = C + Φ'.
struct PearsonData {
  RatPoly phi;
  RatPoly psi;
  RatPoly c;
  RatPoly d;
  Rat u0{1};
};

PearsonData pearson_data(const SievedFamily& fam);

/// Φ p_N' = M_N p_{N+1} + N_N p_N.
struct StructurePair {
  RatPoly m;
  RatPoly n;
  int index = 0;
  Rat eps;
};

/// Closed forms for M_N, N_N with N = nk + j. Chebyshev polynomials of
/// negative index are zero here.
StructurePair structure_pair(const SievedFamily& fam, int N);

/// Same pair written through δ_j and the U_{k,j}, V_{k,j} polynomials.
StructurePair structure_pair_alternate(const SievedFamily& fam, int N);

/// M_0..M_{max_n}, N_0..N_{max_n} from the recursion
///   N_n = -C - N_{n-1} - x M_n,
///   γ_{n+1} M_{n+1} = -Φ + γ_n M_{n-1} + x (N_{n-1} - N_n),
/// started at N_{-1} = -C, M_{-1} = 0, M_0 = D / u0.
std::vector<StructurePair> structure_pairs_recursive(const SievedFamily& fam, int max_n);
StructurePair structure_pair_recursive(const SievedFamily& fam, int N);

/// Φ p_N' - M_N p_{N+1} - N_N p_N using the closed-form pair.
RatPoly structure_residual(const SievedData& data, int N);
RatPoly structure_residual(const SievedFamily& fam, int N);

/// J p'' + K p' + L p = 0.
struct OdeData {
  RatPoly j;
  RatPoly kk;
  RatPoly l;
  RatPoly omega;
};

/// Closed-form Ω_j at index N = nk + j.
RatPoly omega_closed(const SievedFamily& fam, int N);

/// (γ_{N+1} M_N M_{N+1} - N_N (N_N + C)) / Φ; throws not_divisible if the
/// division leaves a remainder.
RatPoly omega_from_structure(const SievedFamily& fam, const PearsonData& pd,
                             const StructurePair& at_n, const StructurePair& at_next);

/// J = Φ M, K = Ψ M - Φ M', L = N M' + (Ω - N') M with the closed Ω_j.
OdeData ode_data(const SievedFamily& fam, int N);

/// The generic route: K = W(M, Φ) + C M and
/// L = W(N, M) + (γ_{N+1} M_N M_{N+1} - N_N (N_N + C)) M_N / Φ.
OdeData ode_data_generic(const SievedFamily& fam, int N);

RatPoly ode_residual(const SievedData& data, const OdeData& ode, int N);
RatPoly ode_residual(const SievedFamily& fam, int N);

struct ClassReport {
  int s = 0;
  /// s == 0: the functional is classical after cancelling `common_factor`.
  bool classical = false;
  /// Monic gcd(Φ, C, D).
  RatPoly common_factor;
  /// lead(Ψ) / lead(Φ); the pair is not admissible when this is a
  /// negative integer (deg Φ = 1 + deg Ψ holds for both kinds).
  Rat leading_ratio;
  bool admissible = true;
};

ClassReport semiclassical_class(const SievedFamily& fam);

}  // namespace sieved
