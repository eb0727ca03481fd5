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

#include <span>
#include <string_view>

namespace sieved::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// True when the AVX2 variants were compiled in and the CPU reports AVX2.
bool avx2_available();

/// The variant the dispatching entry points use. Defaults to the best
/// available; SIEVED_OPS_ISA=scalar in the environment forces the reference.
Isa active_isa();

/// Overrides the dispatch choice (tests). Requesting avx2 on a machine
/// without it falls back to scalar; returns the variant now in effect.
Isa set_active_isa(Isa isa);

/// out[i] = Σ_j c[j] xs[i]^j by Horner. The AVX2 variant performs the same
/// multiply/add sequence per lane and is bitwise identical to the scalar one.
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);

/// Monic three-term recurrence with zero diagonal:
///   p_{i+1}(x) = x p_i(x) - gamma[i] p_{i-1}(x), p_{-1} = 0, p_0 = 1,
/// evaluated to degree n = gamma.size() together with p_n'. gamma[0] is
/// unused (it multiplies p_{-1}). Bitwise identical across variants.
void recurrence(std::span<const double> gamma, std::span<const double> xs,
                std::span<double> value, std::span<double> deriv);

/// For each target t = at[v]:
///   s1[v] = Σ_i 1/(t - src[i]),  s2[v] = Σ_i 1/(t - src[i])²,
/// skipping i == v when `skip_diagonal` (at and src are then the same set).
/// Summation order differs between variants; results agree to rounding.
void inverse_sums(std::span<const double> at, std::span<const double> src, bool skip_diagonal,
                  std::span<double> s1, std::span<double> s2);

namespace scalar {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
void recurrence(std::span<const double> gamma, std::span<const double> xs,
                std::span<double> value, std::span<double> deriv);
void inverse_sums(std::span<const double> at, std::span<const double> src, bool skip_diagonal,
                  std::span<double> s1, std::span<double> s2);
}  // namespace scalar

namespace avx2 {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
void recurrence(std::span<const double> gamma, std::span<const double> xs,
                std::span<double> value, std::span<double> deriv);
void inverse_sums(std::span<const double> at, std::span<const double> src, bool skip_diagonal,
                  std::span<double> s1, std::span<double> s2);
}  // namespace avx2

}  // namespace sieved::kernels
