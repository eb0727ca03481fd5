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

#include <random>
#include <vector>

#include "sieved/poly.hpp"

namespace sieved::test {

inline Rat R(long p, long q = 1) { return Rat(p, q); }

inline RatPoly P(std::initializer_list<Rat> c) { return RatPoly(c); }

/// Small random rational polynomial for property tests.
inline RatPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rat(num(rng), den(rng));
  return RatPoly(std::move(c));
}

}  // namespace sieved::test
