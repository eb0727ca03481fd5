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

#include "sieved/poly.hpp"

#include <cmath>
#include <sstream>

namespace sieved {

namespace {

// Scales every coefficient to an integer over one common denominator.
mpz_class common_denominator(const std::vector<Rat>& c) {
  mpz_class d = 1;
  for (const auto& v : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.raw().get_den_mpz_t());
  return d;
}

std::vector<mpz_class> scaled_numerators(const std::vector<Rat>& c, const mpz_class& d) {
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), d.get_mpz_t(), c[i].raw().get_den_mpz_t());
    out[i] = t * c[i].raw().get_num();
  }
  return out;
}

}  // namespace

// Integer convolution over a common denominator avoids a gcd per
// multiply-add; only the final coefficients are canonicalised.
template <>
RatPoly RatPoly::multiply(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const mpz_class da = common_denominator(a.c_);
  const mpz_class db = common_denominator(b.c_);
  const auto na = scaled_numerators(a.c_, da);
  const auto nb = scaled_numerators(b.c_, db);
  std::vector<mpz_class> acc(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (sgn(na[i]) == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      if (sgn(nb[j]) == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  const mpz_class den = da * db;
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(mpq_class(v, den));
  return RatPoly(std::move(out));
}

DivMod<Rat> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw Error(Errc::domain_error, "polynomial division by zero");
  if (f.degree() < g.degree()) return {RatPoly{}, f};
  std::vector<Rat> rem = f.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1));
  const auto& gc = g.coeffs();
  const Rat inv_lead = Rat(1) / g.leading();
  const std::size_t gd = gc.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rat t = rem[k + gd] * inv_lead;
    quo[k] = t;
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i <= gd; ++i) rem[k + i] -= t * gc[i];
  }
  rem.resize(gd);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly divide_exact(const RatPoly& f, const RatPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) {
    throw Error(Errc::not_divisible,
                "polynomial not divisible: remainder " + to_string(r));
  }
  return q;
}

RatPoly make_monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  return f * (Rat(1) / f.leading());
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) {
  RatPoly a = make_monic(f);
  RatPoly b = make_monic(g);
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = make_monic(r);
  }
  return a;
}

RealPoly to_real(const RatPoly& f) {
  std::vector<double> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(v.to_double());
  return RealPoly(std::move(c));
}

Rat evaluate_exact(const RatPoly& f, double x) {
  if (!std::isfinite(x)) throw Error(Errc::domain_error, "non-finite abscissa");
  return f.evaluate(Rat(mpq_class(x)));
}

std::string to_string(const RatPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Rat& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    const Rat mag = first ? c : (c.sign() < 0 ? -c : c);
    os << mag;
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace sieved
