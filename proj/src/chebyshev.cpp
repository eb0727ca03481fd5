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

#include "sieved/chebyshev.hpp"

#include <string>

namespace sieved {

namespace {

const Rat kQuarter(1, 4);
const Rat kHalf(1, 2);

std::vector<RatPoly> monic_sequence(ChebKind kind, int max_index) {
  std::vector<RatPoly> out;
  out.reserve(static_cast<std::size_t>(max_index) + 1);
  RatPoly prev;  // index -1
  RatPoly cur = RatPoly::constant(Rat(1));
  const RatPoly x = RatPoly::x();
  for (int n = 0; n <= max_index; ++n) {
    out.push_back(cur);
    const Rat& g = (n == 1 && kind == ChebKind::FirstKind) ? kHalf : kQuarter;
    RatPoly next = x * cur - prev * (n == 0 ? Rat(0) : g);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

}  // namespace

RatPoly monic_chebyshev(ChebKind kind, int n) {
  const int lowest = kind == ChebKind::SecondKind ? -1 : 0;
  if (n < lowest) {
    throw Error(Errc::out_of_range,
                "monic Chebyshev index " + std::to_string(n) + " below " + std::to_string(lowest));
  }
  if (n < 0) return {};
  return monic_sequence(kind, n).back();
}

RatPoly classical_chebyshev(ChebKind kind, int n) {
  RatPoly p = monic_chebyshev(kind, n);
  if (kind == ChebKind::FirstKind) return n == 0 ? p : p * pow(Rat(2), n - 1);
  return p * pow(Rat(2), n);
}

ChebyshevTable::ChebyshevTable(int max_index)
    : u_(monic_sequence(ChebKind::SecondKind, max_index < 0 ? 0 : max_index)),
      t_(monic_sequence(ChebKind::FirstKind, max_index < 0 ? 0 : max_index)) {}

const RatPoly& ChebyshevTable::u(int n) const {
  if (n < 0) return zero_;
  if (n > max_index()) {
    throw Error(Errc::out_of_range, "Chebyshev table does not reach index " + std::to_string(n));
  }
  return u_[static_cast<std::size_t>(n)];
}

const RatPoly& ChebyshevTable::t(int n) const {
  if (n < 0 || n > max_index()) {
    throw Error(Errc::out_of_range, "Chebyshev T index " + std::to_string(n) + " not available");
  }
  return t_[static_cast<std::size_t>(n)];
}

std::string_view to_string(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::pythagorean: return "pythagorean";
    case IdentityTag::turan: return "turan";
    case IdentityTag::mixed: return "mixed";
    case IdentityTag::deriv: return "deriv";
    case IdentityTag::sum: return "sum";
    case IdentityTag::product_diff: return "product_diff";
  }
  return "unknown";
}

IdentityTag parse_identity_tag(std::string_view name) {
  for (auto tag : kAllIdentityTags) {
    if (to_string(tag) == name) return tag;
  }
  throw Error(Errc::parse_error, "unknown identity tag '" + std::string(name) + "'");
}

RatPoly identity_residual(const ChebyshevTable& tab, IdentityTag tag, int n, std::optional<int> m) {
  const RatPoly x = RatPoly::x();
  const RatPoly one_minus_x2{Rat(1), Rat(0), Rat(-1)};
  if (tag == IdentityTag::product_diff) {
    if (!m) throw Error(Errc::out_of_range, "product_diff needs the second index m");
    if (n < 0 || *m < 0) throw Error(Errc::out_of_range, "product_diff indices must be >= 0");
    const int mm = *m;
    RatPoly rhs = n <= mm ? tab.u(mm - n) * pow(kQuarter, n)
                          : tab.u(n - mm - 2) * (-pow(kQuarter, mm + 1));
    return tab.u(n) * tab.u(mm) - tab.u(n - 1) * tab.u(mm + 1) - rhs;
  }
  if (n < 1) throw Error(Errc::out_of_range, "identity index must be >= 1");
  switch (tag) {
    case IdentityTag::pythagorean:
      return tab.t(n) * tab.t(n) + one_minus_x2 * (tab.u(n - 1) * tab.u(n - 1)) -
             RatPoly::constant(pow(Rat(4), 1 - n));
    case IdentityTag::turan:
      return tab.u(n) * tab.u(n) - tab.u(n - 1) * tab.u(n + 1) -
             RatPoly::constant(pow(Rat(4), -n));
    case IdentityTag::mixed:
      return x * tab.u(n) - one_minus_x2 * tab.u(n).derivative() -
             tab.t(n + 1) * Rat(n + 1);
    case IdentityTag::deriv:
      return tab.t(n).derivative() - tab.u(n - 1) * Rat(n);
    case IdentityTag::sum:
      return tab.t(n) + x * tab.u(n - 1) - tab.u(n) * Rat(2);
    case IdentityTag::product_diff:
      break;
  }
  throw Error(Errc::out_of_range, "unhandled identity tag");
}

RatPoly identity_residual(IdentityTag tag, int n, std::optional<int> m) {
  const int reach = std::max(n, m.value_or(0)) + 2;
  return identity_residual(ChebyshevTable(reach), tag, n, m);
}

}  // namespace sieved
