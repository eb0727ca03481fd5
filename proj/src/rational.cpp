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

#include "sieved/rational.hpp"

#include <cctype>
#include <string>

#include "sieved/error.hpp"

namespace sieved {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_divisible: return "not-divisible";
    case Errc::regularity_violation: return "regularity-violation";
    case Errc::out_of_range: return "out-of-range";
    case Errc::unsupported_range: return "unsupported-range";
    case Errc::domain_error: return "domain-error";
    case Errc::degenerate_configuration: return "degenerate-configuration";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(Errc::domain_error, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::domain_error, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(Errc::parse_error, "not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

Rat parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1), text).get_si();
    if (exponent > 4096 || exponent < -4096) {
      throw Error(Errc::parse_error, "exponent out of range: '" + std::string(text) + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  const auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    const auto frac = mantissa.substr(dot + 1);
    digits = std::string(mantissa.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }
  if (!all_digits(digits)) {
    throw Error(Errc::parse_error, "not a rational number: '" + std::string(text) + "'");
  }
  mpq_class value{mpz_class(digits, 10)};
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= ten_pow;
  } else {
    value *= ten_pow;
  }
  if (negative) value = -value;
  return Rat(value);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::parse_error, "empty rational");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    return Rat(mpq_class(num, den));
  }
  return parse_decimal(text);
}

Rat pow(const Rat& base, int exp) {
  if (exp < 0) {
    if (base.is_zero()) throw Error(Errc::domain_error, "zero to a negative power");
    return Rat(1) / pow(base, -exp);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exp));
  return Rat(mpq_class(num, den));
}

Rat rising_factorial(const Rat& a, int n) {
  Rat out(1);
  for (int i = 0; i < n; ++i) out *= a + Rat(i);
  return out;
}

Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(mpq_class(f));
}

}  // namespace sieved
