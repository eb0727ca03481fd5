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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sieved/poly.hpp"

namespace sieved {

/// A polynomial named on the command line.
///
///   u:<n> | t:<n>                               classical Chebyshev U_n / T_n
///   first:<λ>:<k>:<n>[:monic|classical]         c_n^λ(x;k), default monic
///   second:<λ>:<k>:<n>[:monic|classical]        B_n^λ(x;k)
struct PolySpec {
  std::string text;
  RatPoly poly;
};

PolySpec parse_poly_spec(std::string_view text);

struct PlotRange {
  double lo = -1.1;
  double hi = 1.1;
};

/// `samples` equally spaced abscissae from lo to hi inclusive (samples >= 2).
std::vector<double> sample_points(int samples, PlotRange range = {});

/// CSV with header "x,y". y is the exactly evaluated value rounded once to
/// double; both columns use the shortest round-trip spelling.
std::string plot_csv(const RatPoly& f, int samples, PlotRange range = {});

std::vector<std::pair<double, double>> parse_plot_csv(std::string_view csv);

/// The three curves of the electrostatic figure: U_4, c_10^{3/2}(x;5) and
/// B_14^{1/2}(x;5) in classical normalization, keyed by output file name.
std::vector<std::pair<std::string, PolySpec>> figure2_curves();

std::string shortest(double v);

}  // namespace sieved
