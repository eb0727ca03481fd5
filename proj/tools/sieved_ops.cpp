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

// sieved-ops: command-line front end for generating sieved ultraspherical
// polynomials and checking their identities, zeros and electrostatics.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 when the flags are invalid. Reports go to stdout (or --output) as JSON
// with a top-level "schema" field; diagnostics go to stderr as JSON lines.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sieved/chebyshev.hpp"
#include "sieved/electrostatics.hpp"
#include "sieved/error.hpp"
#include "sieved/io.hpp"
#include "sieved/numerics.hpp"
#include "sieved/plot.hpp"
#include "sieved/recurrence.hpp"
#include "sieved/semiclassical.hpp"

namespace fs = std::filesystem;
using namespace sieved;

namespace {

/// Invalid flag values discovered after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void diagnostic(std::string_view level, std::string_view code, std::string_view message) {
  Json j;
  j["level"] = level;
  j["code"] = code;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

template <class F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(std::string(to_string(e.code())) + ": " + e.what());
  }
}

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SIEVED_OPS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return cap;
}

/// Runs body(i) for i in [0, count) on up to thread_cap() threads. Results
/// are written by index, so the report order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_cap(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Json header(std::string_view command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file " + path);
    out << text;
  }
  void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

struct FamilyArgs {
  std::string kind;
  std::string lambda;
  int k = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "first or second")->required()->check(CLI::IsMember({"first", "second"}));
    cmd->add_option("--lambda", lambda, "lambda as an exact rational p/q")->required();
    cmd->add_option("--k", k, "sieving period, k >= 3")->required();
  }

  SievedFamily family() const {
    return validated([&] { return SievedFamily(parse_kind(kind), Rat::parse(lambda), k); });
  }

  void describe(Json& j, const SievedFamily& fam) const {
    j["kind"] = to_string(fam.kind());
    j["lambda"] = fam.lambda().str();
    j["k"] = fam.k();
  }
};

void require_nonnegative(int v, std::string_view flag) {
  if (v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
}

// ---------------------------------------------------------------------------

struct GenPoly {
  FamilyArgs fam;
  int n = 0;
  std::string normalization = "monic";

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    require_nonnegative(n, "--n");
    const Normalization norm = validated([&] { return parse_normalization(normalization); });
    const RatPoly p = norm == Normalization::monic ? sieved_monic(f, n) : sieved_classical(f, n);
    Json j = header("gen-poly");
    fam.describe(j, f);
    j["n"] = n;
    j["normalization"] = to_string(norm);
    j["degree"] = degree_to_json(p);
    j["coefficients"] = poly_to_json(p);
    out.write(j);
    return true;
  }
};

struct VerifyIdentities {
  int max_n = 64;

  bool run(const Output& out) const {
    if (max_n < 1) throw UsageError("--max-n must be at least 1");
    const ChebyshevTable table(max_n + 2);
    const std::vector<IdentityTag> tags(std::begin(kAllIdentityTags), std::end(kAllIdentityTags));
    std::vector<Json> rows(tags.size());
    std::vector<char> ok(tags.size());
    parallel_for(tags.size(), [&](std::size_t t) {
      const IdentityTag tag = tags[t];
      Json failures = Json::array();
      int cases = 0;
      for (int n = 1; n <= max_n; ++n) {
        if (tag != IdentityTag::product_diff) {
          ++cases;
          const RatPoly r = identity_residual(table, tag, n);
          if (!r.is_zero()) failures.push_back({{"n", n}, {"residual_degree", degree_to_json(r)}});
          continue;
        }
        for (int m = 1; m <= max_n; ++m) {
          ++cases;
          const RatPoly r = identity_residual(table, tag, n, m);
          if (!r.is_zero()) failures.push_back({{"n", n}, {"m", m}, {"residual_degree", degree_to_json(r)}});
        }
      }
      ok[t] = failures.empty();
      rows[t] = {{"tag", to_string(tag)}, {"cases", cases}, {"passed", failures.empty()}, {"failures", failures}};
    });
    Json j = header("verify-identities");
    j["max_n"] = max_n;
    j["identities"] = rows;
    const bool passed = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

struct VerifyStructure {
  FamilyArgs fam;
  int max_n = 20;

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    require_nonnegative(max_n, "--max-n");
    const SievedData data(f, max_n + 1);
    const auto recursive = structure_pairs_recursive(f, max_n);
    bool passed = true;
    Json rows = Json::array();
    for (int N = 0; N <= max_n; ++N) {
      const RatPoly r = structure_residual(data, N);
      const StructurePair cf = structure_pair(f, N);
      const StructurePair alt = structure_pair_alternate(f, N);
      const auto& rec = recursive[static_cast<std::size_t>(N)];
      const bool rec_ok = cf.m == rec.m && cf.n == rec.n;
      const bool alt_ok = cf.m == alt.m && cf.n == alt.n;
      passed = passed && r.is_zero() && rec_ok && alt_ok;
      rows.push_back({{"n", N},
                      {"residual_degree", degree_to_json(r)},
                      {"matches_recursive", rec_ok},
                      {"matches_alternate", alt_ok}});
    }
    Json j = header("verify-structure");
    fam.describe(j, f);
    j["max_n"] = max_n;
    j["results"] = rows;
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

struct VerifyOde {
  FamilyArgs fam;
  int max_n = 20;

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    require_nonnegative(max_n, "--max-n");
    const SievedData data(f, max_n + 1);
    std::vector<Json> rows(static_cast<std::size_t>(max_n) + 1);
    std::vector<char> ok(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) {
      const int N = static_cast<int>(i);
      const OdeData od = ode_data(f, N);
      const RatPoly r = ode_residual(data, od, N);
      const OdeData gen = ode_data_generic(f, N);
      const bool routes_agree = gen.kk == od.kk && gen.l == od.l;
      ok[i] = r.is_zero() && routes_agree;
      rows[i] = {{"n", N}, {"residual_degree", degree_to_json(r)}, {"matches_generic", routes_agree}};
    });
    Json j = header("verify-ode");
    fam.describe(j, f);
    j["max_n"] = max_n;
    j["results"] = rows;
    const bool passed = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

struct VerifyMapping {
  FamilyArgs fam;
  std::optional<int> max_n;

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    const int k = f.k();
    const int top = max_n.value_or(4 * k);
    require_nonnegative(top, "--max-n");
    const SievedData data(f, top + k + 1);
    const MappingPolys mp = mapping_polys(f);
    const int lo = f.kind() == Kind::First ? 1 : 0;
    const int hi = f.kind() == Kind::First ? k : k - 1;
    bool passed = mp.pi == monic_chebyshev(ChebKind::FirstKind, k);
    Json rows = Json::array();
    for (int n = 0; n * k <= top; ++n) {
      for (int j = lo; j <= hi && n * k + j <= top; ++j) {
        const RatPoly r = mapping_residual(data, n, j);
        passed = passed && r.is_zero();
        rows.push_back({{"n", n}, {"j", j}, {"form", "closed"}, {"residual_degree", degree_to_json(r)}});
      }
      for (int j = 0; j < k && n * k + j <= top; ++j) {
        const RatPoly r = mapping_residual_generic(data, mp, n, j);
        passed = passed && r.is_zero();
        rows.push_back({{"n", n}, {"j", j}, {"form", "generic"}, {"residual_degree", degree_to_json(r)}});
      }
    }
    Json j = header("verify-mapping");
    fam.describe(j, f);
    j["max_n"] = top;
    j["pi_equals_monic_t_k"] = mp.pi == monic_chebyshev(ChebKind::FirstKind, k);
    j["theta"] = poly_to_json(mp.theta);
    j["eta"] = poly_to_json(mp.eta);
    j["pi"] = poly_to_json(mp.pi);
    j["results"] = rows;
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

struct Zeros {
  FamilyArgs fam;
  int n = 0;
  double tol = 1e-10;

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    if (n < 1) throw UsageError("--n must be at least 1");
    const ZeroSet z = validated([&] { return zeros(f, n); });
    const RatPoly p = sieved_monic(f, n);
    const RealPoly dp = to_real(p).derivative();
    double worst = 0.0;
    for (std::size_t i = 0; i < z.values.size(); ++i) {
      double spacing = 2.0;
      if (i > 0) spacing = std::min(spacing, z.values[i] - z.values[i - 1]);
      if (i + 1 < z.values.size()) spacing = std::min(spacing, z.values[i + 1] - z.values[i]);
      const double x = z.values[i];
      const double scale = std::abs(dp.evaluate(x)) * spacing;
      worst = std::max(worst, std::abs(evaluate_exact(p, x).to_double()) / scale);
    }
    Json j = header("zeros");
    fam.describe(j, f);
    j["n"] = n;
    j["zeros"] = z.values;
    j["max_relative_residual"] = worst;
    j["tolerance"] = tol;
    bool passed = worst <= tol;
    if (n % f.k() == 0) {
      try {
        const auto counts = interval_counts(z);
        j["interval_counts"] = counts;
        passed = passed && std::all_of(counts.begin(), counts.end(), [&](int c) { return c == n / f.k(); });
      } catch (const Error& e) {
        diagnostic("warning", to_string(e.code()), e.what());
        j["interval_counts"] = nullptr;
        passed = false;
      }
    }
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

struct Orthogonality {
  FamilyArgs fam;
  int max_n = 12;
  double tol = 1e-9;
  int panels = 4;

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    if (max_n < 1) throw UsageError("--max-n must be at least 1");
    if (panels < 1) throw UsageError("--panels must be at least 1");
    if (f.lambda() <= Rat(-1, 2)) throw UsageError("unsupported_range: orthogonality needs lambda > -1/2");
    std::vector<std::pair<int, int>> pairs;
    for (int n = 1; n <= max_n; ++n) {
      for (int m = 0; m < n; ++m) pairs.emplace_back(m, n);
    }
    std::vector<OrthogonalityResult> res(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t i) {
      res[i] = orthogonality_defect(f, pairs[i].first, pairs[i].second, panels);
    });
    Json rows = Json::array();
    double worst = 0.0;
    bool passed = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      worst = std::max(worst, res[i].defect);
      passed = passed && res[i].defect < tol && res[i].converged;
      rows.push_back({{"m", pairs[i].first},
                      {"n", pairs[i].second},
                      {"defect", res[i].defect},
                      {"refinement_change", res[i].refinement_change},
                      {"converged", res[i].converged}});
    }
    Json j = header("orthogonality");
    fam.describe(j, f);
    j["max_n"] = max_n;
    j["tolerance"] = tol;
    j["max_defect"] = worst;
    j["pairs"] = rows;
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read init file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("init file is not JSON: " + std::string(e.what()));
  }
  const Json& arr = j.is_object() ? (j.contains("x_star") ? j["x_star"] : j.value("x", Json())) : j;
  if (!arr.is_array()) throw UsageError("init file must hold an array of abscissae or an object with \"x\"");
  Configuration cfg;
  for (const auto& v : arr) {
    if (!v.is_number()) throw UsageError("init file abscissae must be numbers");
    cfg.x.push_back(v.get<double>());
  }
  return cfg;
}

ChargeSystem make_system(int k, int l, const std::string& q) {
  ChargeSystem sys = validated([&] { return ChargeSystem(k, l, Rat::parse(q)); });
  if (sys.outside_theorem_range()) {
    diagnostic("warning", "outside_theorem_range",
               "q < 1/4 makes the interior charges attractive; no equilibrium claim is made");
  }
  return sys;
}

struct Equilibrium {
  int k = 0;
  int l = 0;
  std::string q;
  std::string init_file;
  double tol = 1e-11;
  int max_iter = 200;

  bool run(const Output& out) const {
    const ChargeSystem sys = make_system(k, l, q);
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (max_iter < 1) throw UsageError("--max-iter must be at least 1");
    std::optional<Configuration> init;
    if (!init_file.empty()) {
      init = read_configuration(init_file);
      if (!is_feasible(sys, *init)) {
        throw UsageError("init configuration must have l points strictly inside each partition interval");
      }
    }
    SolverOptions opts;
    opts.tol = tol;
    opts.max_iterations = max_iter;
    const EquilibriumResult r = solve_equilibrium(sys, init, opts);
    Json j = header("equilibrium");
    j["k"] = k;
    j["l"] = l;
    j["q"] = sys.q().str();
    j["q_tilde"] = sys.q_tilde().str();
    j["lambda"] = sys.lambda().str();
    j["x_star"] = r.x_star.x;
    j["energy"] = r.energy;
    j["grad_inf_norm"] = r.grad_inf_norm;
    j["hessian_pd"] = r.hessian_pd;
    j["diag_dominant"] = r.diag_dominant;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["stalled_at_roundoff"] = r.stalled_at_roundoff;
    out.write(j);
    if (!r.converged) diagnostic("error", "not_converged", "solver stopped before reaching the tolerance");
    return r.converged;
  }
};

struct Cell {
  Rat q;
  int k;
  int l;
};

std::vector<Cell> electrostatics_grid(const std::string& name) {
  std::vector<Cell> cells;
  if (name == "default") {
    for (const Rat& q : {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1), Rat(3, 2)}) {
      for (int k = 3; k <= 5; ++k) {
        for (int l = 1; l <= 3; ++l) cells.push_back({q, k, l});
      }
    }
  } else if (name == "small") {
    for (const Rat& q : {Rat(1, 4), Rat(1)}) cells.push_back({q, 5, 2});
  } else {
    throw UsageError("unknown grid '" + name + "' (expected default or small)");
  }
  return cells;
}

struct VerifyElectrostatics {
  std::string grid = "default";

  bool run(const Output& out) const {
    const auto cells = electrostatics_grid(grid);
    std::vector<TheoremReport> reports(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
      reports[i] = verify_theorem(ChargeSystem(cells[i].k, cells[i].l, cells[i].q));
    });
    Json rows = Json::array();
    bool passed = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const TheoremReport& rep = reports[i];
      Json checks = Json::array();
      for (const auto& c : rep.checks) {
        Json row = {{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(row);
        if (!c.passed) {
          diagnostic("error", "check_failed",
                     c.name + " failed at q=" + cells[i].q.str() + " k=" + std::to_string(cells[i].k) +
                         " l=" + std::to_string(cells[i].l));
        }
      }
      passed = passed && rep.passed();
      rows.push_back({{"q", cells[i].q.str()},
                      {"k", cells[i].k},
                      {"l", cells[i].l},
                      {"passed", rep.passed()},
                      {"solver_iterations", rep.solve.iterations},
                      {"checks", checks}});
    }
    Json j = header("verify-electrostatics");
    j["grid"] = grid;
    j["cells"] = rows;
    j["passed"] = passed;
    out.write(j);
    return passed;
  }
};

struct EmitPlot {
  std::string poly;
  bool figure2 = false;
  int samples = 1001;
  double lo = -1.1;
  double hi = 1.1;
  std::string output_dir = ".";

  bool run(const Output& out) const {
    if (!(lo < hi)) throw UsageError("--lo must be below --hi");
    if (samples < 2) throw UsageError("--samples must be at least 2");
    const PlotRange range{lo, hi};
    if (!figure2) {
      const PolySpec spec = validated([&] { return parse_poly_spec(poly); });
      out.write(plot_csv(spec.poly, samples, range));
      return true;
    }
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    Json files = Json::array();
    for (const auto& [name, spec] : figure2_curves()) {
      const fs::path path = fs::path(output_dir) / name;
      std::ofstream file(path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + path.string());
      file << plot_csv(spec.poly, samples, range);
      files.push_back({{"file", path.string()}, {"poly", spec.text}, {"coefficients", poly_to_json(spec.poly)}});
    }
    Json j = header("emit-plot");
    j["samples"] = samples;
    j["range"] = {lo, hi};
    j["files"] = files;
    out.write(j);
    return true;
  }
};

struct Class {
  FamilyArgs fam;

  bool run(const Output& out) const {
    const SievedFamily f = fam.family();
    const PearsonData pd = pearson_data(f);
    const ClassReport rep = semiclassical_class(f);
    Json j = header("class");
    fam.describe(j, f);
    j["class"] = rep.s;
    j["classical"] = rep.classical;
    j["common_factor"] = poly_to_json(rep.common_factor);
    j["leading_ratio"] = rep.leading_ratio.str();
    j["admissible"] = rep.admissible;
    j["phi"] = poly_to_json(pd.phi);
    j["psi"] = poly_to_json(pd.psi);
    j["c"] = poly_to_json(pd.c);
    j["d"] = poly_to_json(pd.d);
    out.write(j);
    return true;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sieved ultraspherical polynomials: exact identity checks, zeros and electrostatics"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--output", out.path, "write the report to this file instead of stdout");

  GenPoly gen;
  auto* c_gen = app.add_subcommand("gen-poly", "exact coefficients of c_n^lambda(x;k) or B_n^lambda(x;k)");
  gen.fam.add_to(c_gen);
  c_gen->add_option("--n", gen.n, "degree")->required();
  c_gen->add_option("--normalization", gen.normalization, "monic or classical")
      ->check(CLI::IsMember({"monic", "classical"}));

  VerifyIdentities ids;
  auto* c_ids = app.add_subcommand("verify-identities", "exact residuals of the Chebyshev identities");
  c_ids->add_option("--max-n", ids.max_n, "largest index checked");

  VerifyStructure st;
  auto* c_st = app.add_subcommand("verify-structure", "structure relation residuals for indices 0..max-n");
  st.fam.add_to(c_st);
  c_st->add_option("--max-n", st.max_n, "largest index checked");

  VerifyOde ode;
  auto* c_ode = app.add_subcommand("verify-ode", "second-order ODE residuals for indices 0..max-n");
  ode.fam.add_to(c_ode);
  c_ode->add_option("--max-n", ode.max_n, "largest index checked");

  VerifyMapping map;
  auto* c_map = app.add_subcommand("verify-mapping", "polynomial mapping residuals up to degree max-n");
  map.fam.add_to(c_map);
  c_map->add_option("--max-n", map.max_n, "largest degree nk+j checked (default 4k)");

  Zeros zs;
  auto* c_zs = app.add_subcommand("zeros", "zeros from the Jacobi matrix");
  zs.fam.add_to(c_zs);
  c_zs->add_option("--n", zs.n, "degree")->required();
  c_zs->add_option("--tol", zs.tol, "bound on |p(x)| / (|p'(x)| spacing)");

  Orthogonality orth;
  auto* c_orth = app.add_subcommand("orthogonality", "quadrature orthogonality defects for 0 <= m < n <= max-n");
  orth.fam.add_to(c_orth);
  c_orth->add_option("--max-n", orth.max_n, "largest degree");
  c_orth->add_option("--tol", orth.tol, "bound on every defect");
  c_orth->add_option("--panels", orth.panels, "Gauss panels per piece");

  Equilibrium eq;
  auto* c_eq = app.add_subcommand("equilibrium", "solve for the electrostatic equilibrium");
  c_eq->add_option("--k", eq.k, "number of partition intervals")->required();
  c_eq->add_option("--l", eq.l, "charges per interval")->required();
  c_eq->add_option("--q", eq.q, "endpoint charge (rational or decimal)")->required();
  c_eq->add_option("--init-file", eq.init_file, "JSON array (or {\"x\": [...]}) with the starting configuration");
  c_eq->add_option("--tol", eq.tol, "gradient sup-norm tolerance");
  c_eq->add_option("--max-iter", eq.max_iter, "Newton iteration cap");

  VerifyElectrostatics ve;
  auto* c_ve = app.add_subcommand("verify-electrostatics", "check the equilibrium theorem over a grid");
  c_ve->add_option("--grid", ve.grid, "default or small");

  EmitPlot plot;
  auto* c_plot = app.add_subcommand("emit-plot", "CSV samples of a polynomial");
  auto* o_poly = c_plot->add_option("--poly", plot.poly,
                                    "u:<n>, t:<n>, first:<lambda>:<k>:<n>[:monic|classical], second:...");
  auto* o_fig = c_plot->add_flag("--figure2", plot.figure2, "write u4.csv, c10.csv and b14.csv");
  o_poly->excludes(o_fig);
  c_plot->add_option("--samples", plot.samples, "number of sample points");
  c_plot->add_option("--lo", plot.lo, "left end of the range");
  c_plot->add_option("--hi", plot.hi, "right end of the range");
  c_plot->add_option("--output-dir", plot.output_dir, "directory for --figure2 files");

  Class cls;
  auto* c_cls = app.add_subcommand("class", "Pearson data and semiclassical class");
  cls.fam.add_to(c_cls);

  try {
    app.parse(argc, argv);
    if (c_plot->parsed() && !plot.figure2 && plot.poly.empty()) {
      throw CLI::ValidationError("emit-plot needs --poly or --figure2");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnostic("error", "invalid_flags", e.what());
    return 2;
  }

  try {
    bool passed = true;
    if (c_gen->parsed()) passed = gen.run(out);
    else if (c_ids->parsed()) passed = ids.run(out);
    else if (c_st->parsed()) passed = st.run(out);
    else if (c_ode->parsed()) passed = ode.run(out);
    else if (c_map->parsed()) passed = map.run(out);
    else if (c_zs->parsed()) passed = zs.run(out);
    else if (c_orth->parsed()) passed = orth.run(out);
    else if (c_eq->parsed()) passed = eq.run(out);
    else if (c_ve->parsed()) passed = ve.run(out);
    else if (c_plot->parsed()) passed = plot.run(out);
    else if (c_cls->parsed()) passed = cls.run(out);
    return passed ? 0 : 1;
  } catch (const UsageError& e) {
    diagnostic("error", "invalid_flags", e.what());
    return 2;
  } catch (const Error& e) {
    diagnostic("error", to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    diagnostic("error", "internal", e.what());
    return 1;
  }
}
