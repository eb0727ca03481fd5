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

#include <string_view>
#include <vector>

#include "sieved/chebyshev.hpp"
#include "sieved/poly.hpp"

namespace sieved {

enum class Kind { First, Second };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view name);

/// lambda is admissible iff it is not -m/2 for a positive integer m.
bool is_regular_lambda(const Rat& lambda);

/// A sieved ultraspherical family: first kind c_n^λ(·;k) or second kind
/// B_n^λ(·;k). Construction validates k >= 3 and the regularity of λ.
class SievedFamily {
 public:
  SievedFamily(Kind kind, Rat lambda, int k);

  Kind kind() const { return kind_; }
  const Rat& lambda() const { return lambda_; }
  int k() const { return k_; }

  /// Offset m of the polynomial mapping p_{kn+m} = θ_m q_n(π_k):
  /// 0 for the first kind, k-1 for the second.
  int mapping_offset() const { return kind_ == Kind::First ? 0 : k_ - 1; }

  friend bool operator==(const SievedFamily&, const SievedFamily&) = default;

 private:
  Kind kind_;
  Rat lambda_;
  int k_;
};

/// Coefficients of one line of the block recurrence
///   (x - b_n^{(j)}) p_{nk+j} = p_{nk+j+1} + a_n^{(j)} p_{nk+j-1}.
struct BlockCoeffs {
  Rat a;
  Rat b;
};

/// a_n^{(j)}, b_n^{(j)} for 0 <= j < k. a_0^{(0)} is the convention value 1.
BlockCoeffs block_coeff(const SievedFamily& fam, int n, int j);

/// a_n^{(j)} for any j >= 0, wrapping a_n^{(k+j)} := a_{n+1}^{(j)}.
Rat block_a(const SievedFamily& fam, int n, int j);
Rat block_b(const SievedFamily& fam, int n, int j);

/// Flattened three-term coefficients: γ_N = a_{⌊N/k⌋}^{(N mod k)} (N >= 1)
/// and β_N = 0.
Rat recurrence_gamma(const SievedFamily& fam, int N);
Rat recurrence_beta(const SievedFamily& fam, int N);

/// p_0 .. p_{max_n} from the block recurrence.
std::vector<RatPoly> sieved_sequence(const SievedFamily& fam, int max_n);

/// Monic p_N.
RatPoly sieved_monic(const SievedFamily& fam, int N);

enum class Normalization { monic, classical };

std::string_view to_string(Normalization norm);
Normalization parse_normalization(std::string_view name);

/// Factor with p_N = value * (classical polynomial):
/// second kind ν_N = ⌊N/k⌋! / (2^N (λ+1)_{⌊N/k⌋}),
/// first kind  ϑ_{N-1} = (2λ+1)_{⌊(N-1)/k⌋} / (2^{N-1} (λ+1)_{⌊(N-1)/k⌋}).
struct MonicNormalizer {
  Rat value;
};

MonicNormalizer monic_normalizer(const SievedFamily& fam, int N);

/// c_N^λ(x;k) or B_N^λ(x;k) in the classical normalisation.
RatPoly sieved_classical(const SievedFamily& fam, int N);

/// Gegenbauer C_n^λ (C_n^0 := T_n).
RatPoly ultraspherical(const Rat& lambda, int n);

/// Δ_n(i, j; x): tridiagonal determinant of the block coefficients, with the
/// base cases 0 (j < i-2), 1 (j = i-2), x - b_n^{(i-1)} (j = i-1).
RatPoly delta(const SievedFamily& fam, int n, int i, int j);

/// θ_m, η_{k-1-m} and π_k built from the Δ determinants (r_0 = 0).
struct MappingPolys {
  int m;
  RatPoly theta;
  RatPoly eta;
  RatPoly pi;
};

MappingPolys mapping_polys(const SievedFamily& fam);

/// r_n and s_n of the recurrence of the mapped sequence {q_n}.
Rat mapped_r(const SievedFamily& fam, int n);
Rat mapped_s(const SievedFamily& fam, int n);

/// Monic q_n of the mapped OPS, generated by q_{n+1} = (x - r_n) q_n - s_n q_{n-1}.
RatPoly mapped_q(const SievedFamily& fam, int n);

/// Cached data for repeated checks on one family.
class SievedData {
 public:
  SievedData(SievedFamily fam, int max_n);

  const SievedFamily& family() const { return fam_; }
  int max_n() const { return static_cast<int>(p_.size()) - 1; }
  const RatPoly& p(int N) const;
  /// q_n for -1 <= n <= max_n / k + 1 (q_{-1} = 0).
  const RatPoly& q(int n) const;
  /// q_n(T̂_k(x)) for the same index range.
  const RatPoly& q_of_tk(int n) const;
  const ChebyshevTable& cheb() const { return cheb_; }

 private:
  SievedFamily fam_;
  ChebyshevTable cheb_;
  std::vector<RatPoly> p_;
  std::vector<RatPoly> q_;
  std::vector<RatPoly> q_tk_;
  RatPoly zero_;
};

/// p_{kn+j} minus the closed-form mapping:
///   second kind, 0 <= j <= k-1:
///     Û_j q_n(T̂_k) + 4^{-j} a_n^{(0)} Û_{k-j-2} q_{n-1}(T̂_k)
///   first kind, 1 <= j <= k:
///     (Û_{j-1} q_{n+1}(T̂_k) + 4^{1-j} a_n^{(1)} Û_{k-j-1} q_n(T̂_k)) / Û_{k-1}
RatPoly mapping_residual(const SievedData& data, int n, int j);
RatPoly mapping_residual(const SievedFamily& fam, int n, int j);

/// Same check through the generic block formula built from Δ, θ, η, π:
///   η p_{kn+m+j+1} = Δ_n(m+2,m+j) q_{n+1}(π)
///                    + (∏_{i=1}^{j+1} a_n^{(m+i)}) Δ_n(m+j+3,m+k-1) q_n(π),
/// for 0 <= j <= k-1. Returns η p - right side.
RatPoly mapping_residual_generic(const SievedData& data, const MappingPolys& map, int n, int j);

}  // namespace sieved
