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

#include "sieved/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "sieved/error.hpp"

namespace sieved::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(SIEVED_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("SIEVED_OPS_ISA"); env && std::string_view(env) == "scalar") {
    return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void check_sizes(std::size_t expected, std::size_t got) {
  if (expected != got) throw Error(Errc::out_of_range, "kernel output span has the wrong length");
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return cpu_has_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
  current().store(isa, std::memory_order_relaxed);
  return isa;
}

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  check_sizes(xs.size(), out.size());
#ifdef SIEVED_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::horner(coeffs, xs, out);
#endif
  scalar::horner(coeffs, xs, out);
}

void recurrence(std::span<const double> gamma, std::span<const double> xs,
                std::span<double> value, std::span<double> deriv) {
  check_sizes(xs.size(), value.size());
  check_sizes(xs.size(), deriv.size());
#ifdef SIEVED_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::recurrence(gamma, xs, value, deriv);
#endif
  scalar::recurrence(gamma, xs, value, deriv);
}

void inverse_sums(std::span<const double> at, std::span<const double> src, bool skip_diagonal,
                  std::span<double> s1, std::span<double> s2) {
  check_sizes(at.size(), s1.size());
  check_sizes(at.size(), s2.size());
  if (skip_diagonal) check_sizes(at.size(), src.size());
#ifdef SIEVED_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::inverse_sums(at, src, skip_diagonal, s1, s2);
#endif
  scalar::inverse_sums(at, src, skip_diagonal, s1, s2);
}

}  // namespace sieved::kernels
