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

#include <optional>
#include <string_view>
#include <vector>

#include "sieved/poly.hpp"

namespace sieved {

enum class ChebKind { FirstKind, SecondKind };

/// Monic Chebyshev polynomial: T̂_n = 2^{1-n} T_n (n >= 1, T̂_0 = 1) or
/// Û_n = 2^{-n} U_n, with Û_{-1} = 0. Throws Errc::out_of_range below that.
RatPoly monic_chebyshev(ChebKind kind, int n);

/// Classical T_n / U_n (leading coefficient 2^{n-1} / 2^n).
RatPoly classical_chebyshev(ChebKind kind, int n);

/// Precomputed Û_0..Û_max and T̂_0..T̂_max. Immutable after construction.
///
/// `u(n)` returns the zero polynomial for every negative n. The structure
/// relations below use Û_{j-2}, Û_{k-j-4}, ... at the edges of a block and
/// only agree with the recursive construction under that convention.
class ChebyshevTable {
 public:
  explicit ChebyshevTable(int max_index);

  const RatPoly& u(int n) const;
  const RatPoly& t(int n) const;
  int max_index() const { return static_cast<int>(u_.size()) - 1; }

 private:
  std::vector<RatPoly> u_;
  std::vector<RatPoly> t_;
  RatPoly zero_;
};

enum class IdentityTag { pythagorean, turan, mixed, deriv, sum, product_diff };

inline constexpr IdentityTag kAllIdentityTags[] = {
    IdentityTag::pythagorean, IdentityTag::turan, IdentityTag::mixed,
    IdentityTag::deriv,       IdentityTag::sum,   IdentityTag::product_diff};

std::string_view to_string(IdentityTag tag);
IdentityTag parse_identity_tag(std::string_view name);

/// Exact residual of one of the elementary Chebyshev identities; the zero
/// polynomial means the identity holds at that index.
///
///   pythagorean   T̂_n² + (1-x²)Û_{n-1}² - 4^{1-n}
///   turan         Û_n² - Û_{n-1}Û_{n+1} - 4^{-n}
///   mixed         xÛ_n - (1-x²)Û_n' - (n+1)T̂_{n+1}
///   deriv         T̂_n' - nÛ_{n-1}
///   sum           T̂_n + xÛ_{n-1} - 2Û_n
///   product_diff  Û_nÛ_m - Û_{n-1}Û_{m+1} - { 4^{-n}Û_{m-n}        n <= m
///                                          { -4^{-m-1}Û_{n-m-2}   m < n
///
/// n >= 1 for the first five tags; product_diff takes n, m >= 0 and
/// requires m. `table` must cover index max(n, m) + 1.
RatPoly identity_residual(const ChebyshevTable& table, IdentityTag tag, int n,
                          std::optional<int> m = std::nullopt);

/// Convenience overload that builds its own table.
RatPoly identity_residual(IdentityTag tag, int n, std::optional<int> m = std::nullopt);

}  // namespace sieved
