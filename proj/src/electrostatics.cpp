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

#include "sieved/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sieved/error.hpp"
#include "sieved/kernels.hpp"
#include "sieved/numerics.hpp"
#include "sieved/semiclassical.hpp"

namespace sieved {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inf_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void require_finite_energy(const ChargeSystem& sys, const Configuration& cfg) {
  if (static_cast<int>(cfg.x.size()) != sys.n()) {
    throw Error(Errc::domain_error, "configuration has the wrong number of charges");
  }
  if (!std::isfinite(energy(sys, cfg))) {
    throw Error(Errc::domain_error, "configuration touches a charge; the energy is infinite there");
  }
}

struct Sums {
  std::vector<double> mutual1, mutual2, fixed1, fixed2;
};

Sums pair_sums(const ChargeSystem& sys, const Configuration& cfg) {
  const std::size_t n = cfg.x.size();
  Sums s{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  kernels::inverse_sums(cfg.x, cfg.x, true, s.mutual1, s.mutual2);
  kernels::inverse_sums(cfg.x, sys.interior(), false, s.fixed1, s.fixed2);
  return s;
}

// Relative mismatch scaled by the magnitude of the compared quantity.
double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

ChargeSystem::ChargeSystem(int k, int l, Rat q) : k_(k), l_(l), q_(std::move(q)) {
  if (k_ < 3) throw Error(Errc::out_of_range, "k must be >= 3");
  if (l_ < 1) throw Error(Errc::out_of_range, "l must be >= 1");
  if (q_.sign() <= 0) throw Error(Errc::domain_error, "endpoint charge q must be positive");
  for (int j = 1; j < k_; ++j) interior_.push_back(std::cos(j * std::numbers::pi / k_));
  partition_ = partition_points(k_);
}

bool is_feasible(const ChargeSystem& sys, const Configuration& cfg) {
  const auto& x = cfg.x;
  if (static_cast<int>(x.size()) != sys.n()) return false;
  const auto& pts = sys.partition();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) return false;
    if (i > 0 && !(x[i] > x[i - 1])) return false;
    const std::size_t j = i / static_cast<std::size_t>(sys.l());
    if (!(x[i] > pts[j] && x[i] < pts[j + 1])) return false;
  }
  return true;
}

double energy(const ChargeSystem& sys, const Configuration& cfg) {
  const auto& x = cfg.x;
  const double q = sys.q().to_double();
  const double qt = sys.q_tilde().to_double();
  double e = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !(std::abs(x[i]) < 1.0)) return kInf;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double d = std::abs(x[i] - x[j]);
      if (d == 0.0) return kInf;
      e -= 2.0 * std::log(d);
    }
    e -= 2.0 * q * std::log(1.0 - x[i] * x[i]);
    for (double c : sys.interior()) {
      const double d = std::abs(x[i] - c);
      if (d == 0.0) return kInf;
      e -= 2.0 * qt * std::log(d);
    }
  }
  return e;
}

Eigen::VectorXd gradient(const ChargeSystem& sys, const Configuration& cfg) {
  require_finite_energy(sys, cfg);
  const double q = sys.q().to_double();
  const double qt = sys.q_tilde().to_double();
  const Sums s = pair_sums(sys, cfg);
  Eigen::VectorXd g(static_cast<Eigen::Index>(cfg.x.size()));
  for (std::size_t v = 0; v < cfg.x.size(); ++v) {
    const double x = cfg.x[v];
    g[static_cast<Eigen::Index>(v)] = -2.0 * s.mutual1[v] - 4.0 * q * x / (x * x - 1.0) - 2.0 * qt * s.fixed1[v];
  }
  return g;
}

Eigen::MatrixXd hessian(const ChargeSystem& sys, const Configuration& cfg) {
  require_finite_energy(sys, cfg);
  const double q = sys.q().to_double();
  const double qt = sys.q_tilde().to_double();
  const Sums s = pair_sums(sys, cfg);
  const auto n = static_cast<Eigen::Index>(cfg.x.size());
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = cfg.x[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = xi - cfg.x[static_cast<std::size_t>(j)];
      h(i, j) = -2.0 / (d * d);
    }
    const double w = xi * xi - 1.0;
    h(i, i) = 2.0 * s.mutual2[static_cast<std::size_t>(i)] + 4.0 * q * (xi * xi + 1.0) / (w * w) +
              2.0 * qt * s.fixed2[static_cast<std::size_t>(i)];
  }
  return h;
}

bool strictly_diagonally_dominant(const Eigen::MatrixXd& h) {
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (j != i) off += std::abs(h(i, j));
    }
    if (!(std::abs(h(i, i)) > off)) return false;
  }
  return true;
}

Configuration default_configuration(const ChargeSystem& sys) {
  Configuration cfg;
  const auto& pts = sys.partition();
  const int l = sys.l();
  for (int j = 0; j < sys.k(); ++j) {
    const double a = pts[static_cast<std::size_t>(j)];
    const double b = pts[static_cast<std::size_t>(j) + 1];
    for (int i = l; i >= 1; --i) {
      const double c = std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * l));
      cfg.x.push_back(0.5 * (a + b) + 0.5 * (b - a) * c);
    }
  }
  return cfg;
}

Configuration perturbed_configuration(const ChargeSystem& sys, const Configuration& cfg,
                                      double amplitude, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-amplitude, amplitude);
  Configuration out = cfg;
  const auto& pts = sys.partition();
  const std::size_t l = static_cast<std::size_t>(sys.l());
  for (std::size_t i = 0; i < out.x.size(); ++i) {
    const std::size_t j = i / l;
    const double a = pts[j], b = pts[j + 1];
    const double margin = 1e-3 * (b - a);
    out.x[i] = std::clamp(out.x[i] + noise(rng), a + margin, b - margin);
  }
  for (std::size_t j = 0; j * l < out.x.size(); ++j) {
    std::sort(out.x.begin() + static_cast<std::ptrdiff_t>(j * l),
              out.x.begin() + static_cast<std::ptrdiff_t>((j + 1) * l));
  }
  return out;
}

EquilibriumResult solve_equilibrium(const ChargeSystem& sys, const std::optional<Configuration>& init,
                                    const SolverOptions& opts) {
  Configuration x = init ? *init : default_configuration(sys);
  if (!is_feasible(sys, x)) throw Error(Errc::domain_error, "initial configuration is not feasible");

  EquilibriumResult res;
  double e = energy(sys, x);
  Eigen::VectorXd g = gradient(sys, x);
  double gnorm = inf_norm(g);
  int it = 0;
  for (; it < opts.max_iterations && gnorm >= opts.tol; ++it) {
    const Eigen::MatrixXd h = hessian(sys, x);
    Eigen::LLT<Eigen::MatrixXd> llt(h);
    Eigen::VectorXd d = llt.info() == Eigen::Success ? Eigen::VectorXd(llt.solve(-g)) : Eigen::VectorXd(-g);
    const double slope = g.dot(d);

    bool accepted = false;
    double t = 1.0;
    Configuration trial;
    double e_trial = 0.0;
    Eigen::VectorXd g_trial;
    for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
      trial = x;
      for (std::size_t i = 0; i < trial.x.size(); ++i) trial.x[i] += t * d[static_cast<Eigen::Index>(i)];
      if (!is_feasible(sys, trial)) continue;
      e_trial = energy(sys, trial);
      g_trial = gradient(sys, trial);
      if (e_trial <= e + 1e-4 * t * slope || inf_norm(g_trial) < gnorm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      double scale = 1.0;
      for (double v : x.x) scale = std::max(scale, std::abs(v));
      if (inf_norm(d) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        res.stalled_at_roundoff = true;
      }
      break;
    }
    x = std::move(trial);
    e = e_trial;
    g = std::move(g_trial);
    gnorm = inf_norm(g);
  }

  res.iterations = it;
  res.converged = gnorm < opts.tol || (res.stalled_at_roundoff && gnorm < 1e3 * opts.tol);
  if (!res.converged) res.stalled_at_roundoff = false;
  const Eigen::MatrixXd h = hessian(sys, x);
  res.hessian_pd = Eigen::LLT<Eigen::MatrixXd>(h).info() == Eigen::Success;
  res.diag_dominant = strictly_diagonally_dominant(h);
  res.energy = e;
  res.grad_inf_norm = gnorm;
  res.x_star = std::move(x);
  return res;
}

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

TheoremReport verify_theorem(const ChargeSystem& sys, unsigned long long seed) {
  const SievedFamily fam(Kind::First, sys.lambda(), sys.k());
  const int n = sys.n();
  const double q = sys.q().to_double();
  const double qt = sys.q_tilde().to_double();
  const double lam = sys.lambda().to_double();
  TheoremReport rep;

  const ZeroSet z = zeros(fam, n);
  rep.zeros = z.values;
  const Configuration at_zeros{z.values};

  {
    const double gn = inf_norm(gradient(sys, at_zeros));
    rep.checks.push_back({"gradient_at_zeros", gn < 1e-9, gn, 1e-9, ""});
  }

  {
    // p''/p' at each zero, both from the ODE coefficients (-K/J) and from
    // the polynomial itself, against the stationarity right-hand side.
    const OdeData ode = ode_data(fam, n);
    const RatPoly p = sieved_monic(fam, n);
    const RatPoly dp = p.derivative();
    const RatPoly ddp = dp.derivative();
    double worst = 0.0;
    for (double x : z.values) {
      double rhs = -2.0 * q / (x - 1.0) - 2.0 * q / (x + 1.0);
      for (double c : sys.interior()) rhs -= 2.0 * qt / (x - c);
      const double ode_ratio = (-evaluate_exact(ode.kk, x) / evaluate_exact(ode.j, x)).to_double();
      const double direct = (evaluate_exact(ddp, x) / evaluate_exact(dp, x)).to_double();
      worst = std::max({worst, rel_err(ode_ratio, rhs), rel_err(direct, rhs)});
    }
    rep.checks.push_back({"stationarity_ratio", worst < 1e-8, worst, 1e-8, ""});
  }

  {
    rep.solve = solve_equilibrium(sys);
    double dist = 0.0;
    for (std::size_t i = 0; i < z.values.size(); ++i) {
      dist = std::max(dist, std::abs(rep.solve.x_star.x[i] - z.values[i]));
    }
    rep.checks.push_back({"solver_matches_zeros", rep.solve.converged && dist < 1e-10, dist, 1e-10,
                          rep.solve.converged ? "" : "solver did not converge"});
    rep.checks.push_back({"hessian_diag_dominant", rep.solve.diag_dominant && rep.solve.hessian_pd,
                          rep.solve.diag_dominant ? 1.0 : 0.0, 1.0, ""});

    const Configuration start = perturbed_configuration(sys, at_zeros, 1e-2, seed);
    const EquilibriumResult pert = solve_equilibrium(sys, start);
    double pdist = 0.0;
    for (std::size_t i = 0; i < z.values.size(); ++i) {
      pdist = std::max(pdist, std::abs(pert.x_star.x[i] - z.values[i]));
    }
    rep.checks.push_back({"perturbed_start_matches_zeros", pert.converged && pdist < 1e-10, pdist, 1e-10,
                          pert.converged ? "" : "solver did not converge"});
  }

  {
    rep.interval_counts = interval_counts(z);
    const bool ok = std::all_of(rep.interval_counts.begin(), rep.interval_counts.end(),
                                [&](int c) { return c == sys.l(); });
    rep.checks.push_back({"interval_counts", ok, ok ? 0.0 : 1.0, 0.0, ""});
  }

  {
    const PearsonData pd = pearson_data(fam);
    const StructurePair sp = structure_pair(fam, n);
    const RatPoly dm = sp.m.derivative();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst_pp = 0.0, worst_mn = 0.0;
    int sampled = 0;
    while (sampled < 32) {
      const double x = uni(rng);
      bool near = std::abs(x - 1.0) < 1e-2 || std::abs(x + 1.0) < 1e-2;
      for (double c : sys.interior()) near = near || std::abs(x - c) < 1e-2;
      if (near) continue;
      ++sampled;
      double ends = 1.0 / (x - 1.0) + 1.0 / (x + 1.0);
      double inner = 0.0, inner_scale = 0.0;
      for (double c : sys.interior()) {
        inner += 1.0 / (x - c);
        inner_scale += 1.0 / std::abs(x - c);
      }
      const double scale = std::abs(2.0 * lam + 1.0) * (std::abs(0.5 / (x - 1.0)) + std::abs(0.5 / (x + 1.0)) + inner_scale);
      const double psi_phi = (evaluate_exact(pd.psi, x) / evaluate_exact(pd.phi, x)).to_double();
      const double rhs = 0.5 * (2.0 * lam + 1.0) * ends + (2.0 * lam + 1.0) * inner;
      worst_pp = std::max(worst_pp, std::abs(psi_phi - rhs) / std::max(1.0, scale));

      const double m_ratio = (evaluate_exact(dm, x) / evaluate_exact(sp.m, x)).to_double();
      const double rhs_mn = -0.5 * (2.0 * lam + 1.0) * ends - 2.0 * lam * inner;
      const double scale_mn = std::max(1.0, scale + inner_scale);
      worst_mn = std::max(worst_mn, std::abs(m_ratio - psi_phi - rhs_mn) / scale_mn);
    }
    rep.checks.push_back({"psi_div_phi", worst_pp < 1e-12, worst_pp, 1e-12, ""});
    rep.checks.push_back({"psi_div_phi_mn", worst_mn < 1e-12, worst_mn, 1e-12, ""});
  }
  return rep;
}

}  // namespace sieved
