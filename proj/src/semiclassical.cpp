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

#include "sieved/semiclassical.hpp"

#include <algorithm>
#include <string>

namespace sieved {

namespace {

struct BlockIndex {
  int n;
  int j;
};

BlockIndex split(const SievedFamily& fam, int N) {
  if (N < 0) throw Error(Errc::out_of_range, "structure index must be >= 0");
  return {N / fam.k(), N % fam.k()};
}

Rat quarter_pow(int e) { return pow(Rat(1, 4), e); }

Rat structure_eps(const SievedFamily& fam, int j) {
  const int k = fam.k();
  if (j == k - 1) return Rat(1);
  if (fam.kind() == Kind::Second ? j == k - 2 : j == 0) return Rat(0);
  return Rat(1, 2);
}

}  // namespace

PearsonData pearson_data(const SievedFamily& fam) {
  const int k = fam.k();
  const ChebyshevTable tab(k);
  const RatPoly x = RatPoly::x();
  const RatPoly one_minus_x2{Rat(1), Rat(0), Rat(-1)};
  const Rat& lam = fam.lambda();
  const Rat lk = lam * Rat(k);
  const RatPoly& u = tab.u(k - 1);
  const RatPoly& t = tab.t(k);

  PearsonData pd;
  pd.phi = one_minus_x2 * u;
  if (fam.kind() == Kind::Second) {
    pd.psi = -(x * u * Rat(2) + t * (Rat(k) * (Rat(2) * lam + Rat(1))));
    pd.c = -(x * u + t * (Rat(2) * lk));
    pd.d = -(u + tab.t(k - 1) * lk) * (Rat(2) * pd.u0);
  } else {
    pd.psi = -(t * (Rat(k) * (Rat(2) * lam + Rat(1))));
    pd.c = x * u - t * (Rat(2) * lk);
    pd.d = u * (Rat(-2) * lk * pd.u0);
  }
  return pd;
}

StructurePair structure_pair(const SievedFamily& fam, int N) {
  const auto [n, j] = split(fam, N);
  (void)n;
  const int k = fam.k();
  const ChebyshevTable tab(k);
  const auto u = [&](int i) -> const RatPoly& { return tab.u(i); };
  const RatPoly x = RatPoly::x();
  const Rat lk = fam.lambda() * Rat(k);
  const Rat NN(N);

  StructurePair sp;
  sp.index = N;
  sp.eps = structure_eps(fam, j);
  if (fam.kind() == Kind::Second) {
    sp.m = u(k - 1) * (Rat(-2) * (NN + Rat(1) + lk)) -
           (u(j - 1) * u(k - j - 2) - u(j) * u(k - j - 3)) * (lk / Rat(2));
    sp.n = x * u(k - 1) * (NN + Rat(2) + Rat(2) * lk) - u(k - 2) * (lk * sp.eps) +
           (u(j - 1) * u(k - j - 3) - u(j) * u(k - j - 4)) * (lk / Rat(8));
  } else {
    sp.m = u(k - 1) * (Rat(-2) * (NN + lk)) -
           (u(j - 1) * u(k - j - 2) - u(j - 2) * u(k - j - 1)) * (lk / Rat(2));
    sp.n = x * u(k - 1) * (NN + Rat(2) * lk) - u(k - 2) * (lk * sp.eps) +
           (u(j - 1) * u(k - j - 3) - u(j - 2) * u(k - j - 2)) * (lk / Rat(8));
  }
  return sp;
}

StructurePair structure_pair_alternate(const SievedFamily& fam, int N) {
  const auto [n, j] = split(fam, N);
  (void)n;
  const int k = fam.k();
  const ChebyshevTable tab(k);
  const auto u = [&](int i) -> const RatPoly& { return tab.u(i); };
  const RatPoly x = RatPoly::x();
  const Rat lk = fam.lambda() * Rat(k);
  const Rat NN(N);

  StructurePair sp;
  sp.index = N;
  sp.eps = structure_eps(fam, j);
  RatPoly ukj;
  RatPoly vkj;
  if (fam.kind() == Kind::Second) {
    const Rat delta_j(j == k - 1 ? 0 : 1);
    ukj = j <= (k - 3) / 2 ? u(k - 3 - 2 * j) * (-quarter_pow(j))
                           : u(2 * j - k + 1) * pow(Rat(4), -k + j + 2);
    vkj = j <= (k - 4) / 2 ? u(k - 4 - 2 * j) * (-quarter_pow(j + 2))
                           : u(2 * j - k + 2) * pow(Rat(4), -k + j + 1);
    sp.m = u(k - 1) * (Rat(-2) * (NN + Rat(1) + lk * delta_j)) - ukj * (lk / Rat(2));
    sp.n = x * u(k - 1) * (NN + Rat(2) + Rat(2) * lk * delta_j) - u(k - 2) * (lk / Rat(2)) +
           vkj * (Rat(2) * lk);
  } else {
    const Rat delta_j(j == 0 ? 0 : 1);
    ukj = j <= (k - 1) / 2 ? u(k - 1 - 2 * j) * pow(Rat(4), 1 - j)
                           : u(2 * j - k - 1) * (-pow(Rat(4), -k + j + 1));
    vkj = j <= (k - 2) / 2 ? u(k - 2 - 2 * j) * quarter_pow(j)
                           : u(2 * j - k) * (-pow(Rat(4), -k + j + 1));
    sp.m = u(k - 1) * (Rat(-2) * (NN + lk * delta_j)) - ukj * (lk / Rat(2));
    sp.n = x * u(k - 1) * (NN + Rat(2) * lk) - u(k - 2) * (lk / Rat(2)) + vkj * (lk / Rat(2));
  }
  return sp;
}

std::vector<StructurePair> structure_pairs_recursive(const SievedFamily& fam, int max_n) {
  if (max_n < 0) throw Error(Errc::out_of_range, "structure index must be >= 0");
  const PearsonData pd = pearson_data(fam);
  const RatPoly x = RatPoly::x();

  std::vector<StructurePair> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  RatPoly m_prev;            // M_{n-1}
  RatPoly n_prev = -pd.c;    // N_{n-1}
  RatPoly m_cur = pd.d * (Rat(1) / pd.u0);
  for (int idx = 0; idx <= max_n; ++idx) {
    RatPoly n_cur = -pd.c - n_prev - x * m_cur;
    out.push_back({m_cur, n_cur, idx, structure_eps(fam, idx % fam.k())});
    if (idx == max_n) break;
    const Rat g_cur = idx == 0 ? Rat(0) : recurrence_gamma(fam, idx);
    const Rat g_next = recurrence_gamma(fam, idx + 1);
    RatPoly m_next = (-pd.phi + m_prev * g_cur + x * (n_prev - n_cur)) * (Rat(1) / g_next);
    m_prev = std::move(m_cur);
    m_cur = std::move(m_next);
    n_prev = std::move(n_cur);
  }
  return out;
}

StructurePair structure_pair_recursive(const SievedFamily& fam, int N) {
  return structure_pairs_recursive(fam, N).back();
}

RatPoly structure_residual(const SievedData& data, int N) {
  const SievedFamily& fam = data.family();
  const PearsonData pd = pearson_data(fam);
  const StructurePair sp = structure_pair(fam, N);
  return pd.phi * data.p(N).derivative() - sp.m * data.p(N + 1) - sp.n * data.p(N);
}

RatPoly structure_residual(const SievedFamily& fam, int N) {
  return structure_residual(SievedData(fam, N + 1), N);
}

RatPoly omega_closed(const SievedFamily& fam, int N) {
  const auto [n, j] = split(fam, N);
  (void)n;
  const int k = fam.k();
  const ChebyshevTable tab(k);
  const Rat lk = fam.lambda() * Rat(k);
  const Rat NN(N);
  if (fam.kind() == Kind::Second) {
    return tab.u(k - 1) * ((NN + Rat(1)) * (NN + Rat(2) + Rat(2) * lk)) -
           tab.u(j) * tab.u(k - j - 3) * (lk / Rat(2));
  }
  return tab.u(k - 1) * ((NN + Rat(1)) * (NN + Rat(2) * lk)) +
         tab.u(j - 1) * tab.u(k - j - 2) * (lk / Rat(2));
}

RatPoly omega_from_structure(const SievedFamily& fam, const PearsonData& pd,
                             const StructurePair& at_n, const StructurePair& at_next) {
  const RatPoly numer = at_n.m * at_next.m * recurrence_gamma(fam, at_n.index + 1) -
                        at_n.n * (at_n.n + pd.c);
  return divide_exact(numer, pd.phi);
}

OdeData ode_data(const SievedFamily& fam, int N) {
  const PearsonData pd = pearson_data(fam);
  const StructurePair sp = structure_pair(fam, N);
  const RatPoly dm = sp.m.derivative();
  OdeData od;
  od.omega = omega_closed(fam, N);
  od.j = pd.phi * sp.m;
  od.kk = pd.psi * sp.m - pd.phi * dm;
  od.l = sp.n * dm + (od.omega - sp.n.derivative()) * sp.m;
  return od;
}

OdeData ode_data_generic(const SievedFamily& fam, int N) {
  const PearsonData pd = pearson_data(fam);
  const StructurePair at_n = structure_pair(fam, N);
  const StructurePair at_next = structure_pair(fam, N + 1);
  const RatPoly numer = at_n.m * at_next.m * recurrence_gamma(fam, N + 1) -
                        at_n.n * (at_n.n + pd.c);
  OdeData od;
  od.omega = divide_exact(numer, pd.phi);
  od.j = pd.phi * at_n.m;
  od.kk = wronskian(at_n.m, pd.phi) + pd.c * at_n.m;
  od.l = wronskian(at_n.n, at_n.m) + divide_exact(numer * at_n.m, pd.phi);
  return od;
}

RatPoly ode_residual(const SievedData& data, const OdeData& ode, int N) {
  const RatPoly& p = data.p(N);
  const RatPoly dp = p.derivative();
  return ode.j * dp.derivative() + ode.kk * dp + ode.l * p;
}

RatPoly ode_residual(const SievedFamily& fam, int N) {
  return ode_residual(SievedData(fam, N), ode_data(fam, N), N);
}

ClassReport semiclassical_class(const SievedFamily& fam) {
  const PearsonData pd = pearson_data(fam);
  ClassReport rep;
  rep.common_factor = gcd(gcd(pd.phi, pd.c), pd.d);
  const RatPoly c = divide_exact(pd.c, rep.common_factor);
  const RatPoly d = pd.d.is_zero() ? RatPoly{} : divide_exact(pd.d, rep.common_factor);
  rep.s = std::max(c.degree() - 1, d.degree());
  rep.classical = rep.s == 0;
  rep.leading_ratio = pd.psi.leading() / pd.phi.leading();
  if (pd.phi.degree() == pd.psi.degree() + 1) {
    rep.admissible = !(rep.leading_ratio.is_integer() && rep.leading_ratio.sign() < 0);
  }
  return rep;
}

}  // namespace sieved
