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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sieved/error.hpp"
#include "sieved/rational.hpp"

namespace sieved {

template <class T>
concept Scalar = std::same_as<T, Rat> || std::same_as<T, double>;

/// Dense univariate polynomial, coefficients in ascending powers.
///
/// The zero polynomial is the empty coefficient list and has degree -1
/// (standing in for -infinity). Every other value has a nonzero leading
/// coefficient. `Poly<Rat>` is exact and is what all identity checks use;
/// `Poly<double>` only feeds the numerics. The two never mix implicitly.
template <Scalar T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly monomial(std::size_t power, T coeff = T(1)) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(coeff);
    return Poly(std::move(c));
  }

  const std::vector<T>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& leading() const { return c_.back(); }

  /// Coefficient of x^i; zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (is_zero_scalar(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= T(-1); }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  Poly& operator*=(const Poly& o) { return *this = multiply(*this, o); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  static bool is_zero_scalar(const T& v) {
    if constexpr (std::same_as<T, Rat>) {
      return v.is_zero();
    } else {
      return v == 0.0;
    }
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }

  static Poly multiply(const Poly& a, const Poly& b);

  std::vector<T> c_;
};

using RatPoly = Poly<Rat>;
using RealPoly = Poly<double>;

template <>
RatPoly RatPoly::multiply(const RatPoly& a, const RatPoly& b);

template <>
inline RealPoly RealPoly::multiply(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RealPoly(std::move(out));
}

/// f(g(x)), Horner in the polynomial ring.
template <Scalar T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g) {
  Poly<T> acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + Poly<T>::constant(*it);
  return acc;
}

/// W(f, g) = f g' - f' g.
template <Scalar T>
Poly<T> wronskian(const Poly<T>& f, const Poly<T>& g) {
  return f * g.derivative() - f.derivative() * g;
}

template <Scalar T>
struct DivMod {
  Poly<T> quotient;
  Poly<T> remainder;
};

/// Euclidean division; throws domain_error for a zero divisor.
DivMod<Rat> divmod(const RatPoly& f, const RatPoly& g);

/// Returns q with f = q g exactly, or throws Errc::not_divisible.
RatPoly divide_exact(const RatPoly& f, const RatPoly& g);

/// Monic greatest common divisor (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& f, const RatPoly& g);

/// Scales to leading coefficient 1; the zero polynomial stays zero.
RatPoly make_monic(const RatPoly& f);

RealPoly to_real(const RatPoly& f);

/// Exact evaluation at a binary64 abscissa (converted without rounding).
Rat evaluate_exact(const RatPoly& f, double x);

/// Human-readable "c0 + c1*x + ..." form for diagnostics.
std::string to_string(const RatPoly& f);

inline std::ostream& operator<<(std::ostream& os, const RatPoly& f) { return os << to_string(f); }

}  // namespace sieved
