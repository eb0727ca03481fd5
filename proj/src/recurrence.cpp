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

#include "sieved/recurrence.hpp"

#include <string>

namespace sieved {

namespace {

const Rat kQuarter(1, 4);

void require_regular_pole(const Rat& denom, const SievedFamily& fam) {
  if (denom.is_zero()) {
    throw Error(Errc::regularity_violation,
                "block coefficient pole for lambda=" + fam.lambda().str());
  }
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::First ? "first" : "second"; }

Kind parse_kind(std::string_view name) {
  if (name == "first") return Kind::First;
  if (name == "second") return Kind::Second;
  throw Error(Errc::parse_error, "kind must be 'first' or 'second', got '" + std::string(name) + "'");
}

bool is_regular_lambda(const Rat& lambda) {
  const Rat twice = lambda * Rat(2);
  return !(twice.is_integer() && twice.sign() < 0);
}

SievedFamily::SievedFamily(Kind kind, Rat lambda, int k)
    : kind_(kind), lambda_(std::move(lambda)), k_(k) {
  if (k_ < 3) throw Error(Errc::out_of_range, "sieving period k must be >= 3, got " + std::to_string(k_));
  if (!is_regular_lambda(lambda_)) {
    throw Error(Errc::regularity_violation,
                "lambda=" + lambda_.str() + " is of the form -m/2; the functional is not regular");
  }
}

BlockCoeffs block_coeff(const SievedFamily& fam, int n, int j) {
  const int k = fam.k();
  if (n < 0 || j < 0 || j >= k) {
    throw Error(Errc::out_of_range,
                "block index (n=" + std::to_string(n) + ", j=" + std::to_string(j) + ") out of range");
  }
  const Rat& lam = fam.lambda();
  const Rat nn(n);
  Rat a = kQuarter;
  if (j == 0 && n == 0) {
    a = Rat(1);
  } else if (fam.kind() == Kind::First) {
    if (j == 0) {
      require_regular_pole(nn + lam, fam);
      a = nn / (Rat(4) * (nn + lam));
    } else if (j == 1) {
      if (n == 0 && lam.is_zero()) {
        a = Rat(1, 2);  // limit of 2λ / 4λ
      } else {
        require_regular_pole(nn + lam, fam);
        a = (nn + Rat(2) * lam) / (Rat(4) * (nn + lam));
      }
    }
  } else {
    if (j == 0) {
      require_regular_pole(nn + lam, fam);
      a = nn / (Rat(4) * (nn + lam));
    } else if (j == k - 1) {
      require_regular_pole(nn + Rat(1) + lam, fam);
      a = (nn + Rat(1) + Rat(2) * lam) / (Rat(4) * (nn + Rat(1) + lam));
    }
  }
  return {std::move(a), Rat(0)};
}

Rat block_a(const SievedFamily& fam, int n, int j) {
  if (j < 0) throw Error(Errc::out_of_range, "negative block column");
  return block_coeff(fam, n + j / fam.k(), j % fam.k()).a;
}

Rat block_b(const SievedFamily& fam, int n, int j) {
  if (j < 0) throw Error(Errc::out_of_range, "negative block column");
  return block_coeff(fam, n + j / fam.k(), j % fam.k()).b;
}

Rat recurrence_gamma(const SievedFamily& fam, int N) {
  if (N < 1) throw Error(Errc::out_of_range, "gamma_N needs N >= 1");
  return block_coeff(fam, N / fam.k(), N % fam.k()).a;
}

Rat recurrence_beta(const SievedFamily& fam, int N) {
  if (N < 0) throw Error(Errc::out_of_range, "beta_N needs N >= 0");
  return block_coeff(fam, N / fam.k(), N % fam.k()).b;
}

std::vector<RatPoly> sieved_sequence(const SievedFamily& fam, int max_n) {
  if (max_n < 0) throw Error(Errc::out_of_range, "polynomial index must be >= 0");
  std::vector<RatPoly> p;
  p.reserve(static_cast<std::size_t>(max_n) + 1);
  p.push_back(RatPoly::constant(Rat(1)));
  const RatPoly x = RatPoly::x();
  for (int N = 0; N < max_n; ++N) {
    const BlockCoeffs c = block_coeff(fam, N / fam.k(), N % fam.k());
    RatPoly next = (x - RatPoly::constant(c.b)) * p.back();
    if (N > 0) next -= p[static_cast<std::size_t>(N) - 1] * c.a;
    p.push_back(std::move(next));
  }
  return p;
}

RatPoly sieved_monic(const SievedFamily& fam, int N) { return sieved_sequence(fam, N).back(); }

std::string_view to_string(Normalization norm) {
  return norm == Normalization::monic ? "monic" : "classical";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "monic") return Normalization::monic;
  if (name == "classical") return Normalization::classical;
  throw Error(Errc::parse_error, "normalization must be 'monic' or 'classical'");
}

MonicNormalizer monic_normalizer(const SievedFamily& fam, int N) {
  if (N < 0) throw Error(Errc::out_of_range, "polynomial index must be >= 0");
  const Rat& lam = fam.lambda();
  Rat value;
  if (fam.kind() == Kind::Second) {
    const int blocks = N / fam.k();
    value = factorial(blocks) / (pow(Rat(2), N) * rising_factorial(lam + Rat(1), blocks));
  } else {
    if (N == 0) return {Rat(1)};
    const int blocks = (N - 1) / fam.k();
    value = rising_factorial(Rat(2) * lam + Rat(1), blocks) /
            (pow(Rat(2), N - 1) * rising_factorial(lam + Rat(1), blocks));
  }
  if (value.is_zero()) {
    throw Error(Errc::regularity_violation, "classical normalisation degenerates at this lambda");
  }
  return {std::move(value)};
}

RatPoly sieved_classical(const SievedFamily& fam, int N) {
  return sieved_monic(fam, N) * (Rat(1) / monic_normalizer(fam, N).value);
}

RatPoly ultraspherical(const Rat& lambda, int n) {
  if (n < 0) throw Error(Errc::out_of_range, "ultraspherical degree must be >= 0");
  if (!is_regular_lambda(lambda)) {
    throw Error(Errc::regularity_violation, "ultraspherical parameter " + lambda.str() + " is not regular");
  }
  if (lambda.is_zero()) return classical_chebyshev(ChebKind::FirstKind, n);
  RatPoly prev;
  RatPoly cur = RatPoly::constant(Rat(1));
  const RatPoly x = RatPoly::x();
  for (int i = 0; i < n; ++i) {
    const Rat ii(i);
    RatPoly next;
    if (i == 0) {
      next = x * (Rat(2) * lambda);
    } else {
      next = (x * cur * (Rat(2) * (ii + lambda)) - prev * (ii + Rat(2) * lambda - Rat(1))) *
             (Rat(1) / (ii + Rat(1)));
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly delta(const SievedFamily& fam, int n, int i, int j) {
  if (j < i - 2) return {};
  if (j == i - 2) return RatPoly::constant(Rat(1));
  if (n < 0 || i < 1) {
    throw Error(Errc::out_of_range,
                "delta index (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ") out of range");
  }
  const RatPoly x = RatPoly::x();
  RatPoly before = RatPoly::constant(Rat(1));                       // Δ(i, i-2)
  RatPoly last = x - RatPoly::constant(block_b(fam, n, i - 1));      // Δ(i, i-1)
  for (int t = i; t <= j; ++t) {
    RatPoly next = (x - RatPoly::constant(block_b(fam, n, t))) * last - before * block_a(fam, n, t);
    before = std::move(last);
    last = std::move(next);
  }
  return last;
}

MappingPolys mapping_polys(const SievedFamily& fam) {
  const int m = fam.mapping_offset();
  const int k = fam.k();
  MappingPolys out{m, delta(fam, 0, 1, m - 1), {}, {}};
  out.eta = divide_exact(delta(fam, 0, m + 2, m + k - 1), out.theta);
  out.pi = delta(fam, 0, 1, m) * out.eta - delta(fam, 0, m + 3, m + k - 1) * block_a(fam, 0, m + 1);
  return out;
}

Rat mapped_r(const SievedFamily& fam, int n) {
  if (n < 0) throw Error(Errc::out_of_range, "mapped recurrence index must be >= 0");
  if (n == 0) return Rat(0);
  const int m = fam.mapping_offset();
  const int k = fam.k();
  const RatPoly eta = mapping_polys(fam).eta;
  const RatPoly r = delta(fam, n, m + 3, m + k - 1) * block_a(fam, n, m + 1) -
                    delta(fam, 0, m + 3, m + k - 1) * block_a(fam, 0, m + 1) +
                    delta(fam, n - 1, m + 2, m + k - 2) * block_a(fam, n, m) -
                    delta(fam, 0, 1, m - 2) * eta * block_a(fam, 0, m);
  return r[0];
}

Rat mapped_s(const SievedFamily& fam, int n) {
  if (n < 1) throw Error(Errc::out_of_range, "s_n needs n >= 1");
  const int m = fam.mapping_offset();
  Rat s = block_a(fam, n, m);
  for (int i = 1; i <= fam.k() - 1; ++i) s *= block_a(fam, n - 1, m + i);
  return s;
}

namespace {

std::vector<RatPoly> mapped_q_sequence(const SievedFamily& fam, int max_n) {
  std::vector<RatPoly> q;
  q.push_back(RatPoly::constant(Rat(1)));
  const RatPoly x = RatPoly::x();
  RatPoly prev;
  for (int n = 0; n < max_n; ++n) {
    RatPoly next = (x - RatPoly::constant(mapped_r(fam, n))) * q.back();
    if (n > 0) next -= prev * mapped_s(fam, n);
    prev = q.back();
    q.push_back(std::move(next));
  }
  return q;
}

}  // namespace

RatPoly mapped_q(const SievedFamily& fam, int n) {
  if (n < 0) throw Error(Errc::out_of_range, "q_n needs n >= 0");
  return mapped_q_sequence(fam, n).back();
}

SievedData::SievedData(SievedFamily fam, int max_n)
    : fam_(std::move(fam)),
      cheb_(fam_.k() + 2),
      p_(sieved_sequence(fam_, max_n)),
      q_(mapped_q_sequence(fam_, max_n / fam_.k() + 2)) {
  q_tk_.reserve(q_.size());
  const RatPoly& tk = cheb_.t(fam_.k());
  for (const auto& q : q_) q_tk_.push_back(compose(q, tk));
}

const RatPoly& SievedData::p(int N) const {
  if (N < 0 || N > max_n()) throw Error(Errc::out_of_range, "p_N index " + std::to_string(N) + " not cached");
  return p_[static_cast<std::size_t>(N)];
}

const RatPoly& SievedData::q(int n) const {
  if (n == -1) return zero_;
  if (n < -1 || n >= static_cast<int>(q_.size())) {
    throw Error(Errc::out_of_range, "q_n index " + std::to_string(n) + " not cached");
  }
  return q_[static_cast<std::size_t>(n)];
}

const RatPoly& SievedData::q_of_tk(int n) const {
  if (n == -1) return zero_;
  if (n < -1 || n >= static_cast<int>(q_tk_.size())) {
    throw Error(Errc::out_of_range, "q_n(T_k) index " + std::to_string(n) + " not cached");
  }
  return q_tk_[static_cast<std::size_t>(n)];
}

RatPoly mapping_residual(const SievedData& data, int n, int j) {
  const SievedFamily& fam = data.family();
  const int k = fam.k();
  const ChebyshevTable& u = data.cheb();
  if (n < 0) throw Error(Errc::out_of_range, "mapping block index must be >= 0");
  if (fam.kind() == Kind::Second) {
    if (j < 0 || j > k - 1) throw Error(Errc::out_of_range, "second-kind mapping needs 0 <= j <= k-1");
    const RatPoly rhs = u.u(j) * data.q_of_tk(n) +
                        u.u(k - j - 2) * data.q_of_tk(n - 1) * (pow(kQuarter, j) * block_coeff(fam, n, 0).a);
    return data.p(n * k + j) - rhs;
  }
  if (j < 1 || j > k) throw Error(Errc::out_of_range, "first-kind mapping needs 1 <= j <= k");
  const RatPoly numer = u.u(j - 1) * data.q_of_tk(n + 1) +
                        u.u(k - j - 1) * data.q_of_tk(n) * (pow(kQuarter, j - 1) * block_coeff(fam, n, 1).a);
  const RatPoly& p = data.p(n * k + j);
  auto [quo, rem] = divmod(numer, u.u(k - 1));
  if (!rem.is_zero()) return u.u(k - 1) * p - numer;
  return p - quo;
}

RatPoly mapping_residual(const SievedFamily& fam, int n, int j) {
  return mapping_residual(SievedData(fam, (n + 1) * fam.k() + 1), n, j);
}

RatPoly mapping_residual_generic(const SievedData& data, const MappingPolys& map, int n, int j) {
  const SievedFamily& fam = data.family();
  const int k = fam.k();
  const int m = map.m;
  if (n < 0 || j < 0 || j > k - 1) throw Error(Errc::out_of_range, "generic mapping index out of range");
  Rat prod(1);
  for (int i = 1; i <= j + 1; ++i) prod *= block_a(fam, n, m + i);
  const RatPoly rhs = delta(fam, n, m + 2, m + j) * compose(data.q(n + 1), map.pi) +
                      delta(fam, n, m + j + 3, m + k - 1) * compose(data.q(n), map.pi) * prod;
  return map.eta * data.p(n * k + m + j + 1) - rhs;
}

}  // namespace sieved
