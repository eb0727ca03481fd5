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

#include "sieved/plot.hpp"

#include <charconv>
#include <sstream>

#include "sieved/chebyshev.hpp"
#include "sieved/error.hpp"
#include "sieved/recurrence.hpp"

namespace sieved {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(const std::string& s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + s + "' in polynomial spec");
  }
  return v;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, "bad number '" + std::string(s) + "' in CSV");
  }
  return v;
}

}  // namespace

PolySpec parse_poly_spec(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  if ((head == "u" || head == "t") && parts.size() == 2) {
    const int n = parse_int(parts[1], "degree");
    if (n < 0) throw Error(Errc::out_of_range, "degree must be nonnegative");
    return {std::string(text),
            classical_chebyshev(head == "u" ? ChebKind::SecondKind : ChebKind::FirstKind, n)};
  }
  if ((head == "first" || head == "second") && (parts.size() == 4 || parts.size() == 5)) {
    const SievedFamily fam(parse_kind(head), Rat::parse(parts[1]), parse_int(parts[2], "k"));
    const int n = parse_int(parts[3], "degree");
    if (n < 0) throw Error(Errc::out_of_range, "degree must be nonnegative");
    const Normalization norm = parts.size() == 5 ? parse_normalization(parts[4]) : Normalization::monic;
    return {std::string(text), norm == Normalization::monic ? sieved_monic(fam, n) : sieved_classical(fam, n)};
  }
  throw Error(Errc::parse_error, "unrecognized polynomial spec '" + std::string(text) + "'");
}

std::vector<double> sample_points(int samples, PlotRange range) {
  if (samples < 2) throw Error(Errc::out_of_range, "need at least two samples");
  std::vector<double> xs(static_cast<std::size_t>(samples));
  const double step = (range.hi - range.lo) / (samples - 1);
  for (int i = 0; i < samples; ++i) xs[static_cast<std::size_t>(i)] = range.lo + i * step;
  xs.back() = range.hi;
  return xs;
}

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string plot_csv(const RatPoly& f, int samples, PlotRange range) {
  std::string out = "x,y\n";
  for (double x : sample_points(samples, range)) {
    out += shortest(x);
    out += ',';
    out += shortest(evaluate_exact(f, x).to_double());
    out += '\n';
  }
  return out;
}

std::vector<std::pair<double, double>> parse_plot_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != "x,y") throw Error(Errc::parse_error, "CSV header must be x,y");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(Errc::parse_error, "CSV row without a comma");
    const std::string_view sv(line);
    rows.emplace_back(parse_double(sv.substr(0, comma)), parse_double(sv.substr(comma + 1)));
  }
  return rows;
}

std::vector<std::pair<std::string, PolySpec>> figure2_curves() {
  return {{"u4.csv", parse_poly_spec("u:4")},
          {"c10.csv", parse_poly_spec("first:3/2:5:10:classical")},
          {"b14.csv", parse_poly_spec("second:1/2:5:14:classical")}};
}

}  // namespace sieved
