#include "critmult/solver_1d.hpp"

#include "critmult/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

namespace critmult {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

Vec to_vec(const std::vector<double>& u) {
  return Eigen::Map<const Vec>(u.data(), static_cast<Eigen::Index>(u.size()));
}

std::vector<double> to_std(const Vec& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

// -D2 on the periodic grid (positive semidefinite), plus `shift` on the
// diagonal.
SpMat periodic_laplacian(int m, double h, double shift) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(3 * m);
  const double c = 1.0 / (h * h);
  for (int i = 0; i < m; ++i) {
    t.emplace_back(i, i, 2.0 * c + shift);
    t.emplace_back(i, (i + 1) % m, -c);
    t.emplace_back(i, (i + m - 1) % m, -c);
  }
  SpMat L(m, m);
  L.setFromTriplets(t.begin(), t.end());
  return L;
}

Vec apply_operator(const ReducedProblem& pr, const Vec& u) {
  const int m = pr.grid();
  const double c = 1.0 / (pr.h() * pr.h());
  Vec r(m);
  for (int i = 0; i < m; ++i)
    r[i] = c * (2.0 * u[i] - u[(i + 1) % m] - u[(i + m - 1) % m]) +
           pr.alpha * u[i];
  return r;
}

Vec residual(const ReducedProblem& pr, const Vec& u) {
  Vec r = apply_operator(pr, u);
  for (int i = 0; i < r.size(); ++i)
    r[i] -= pr.f_samples[i] * std::pow(u[i], pr.p);
  return r;
}

double sup_norm(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

bool is_nonconstant(const std::vector<double>& u, double tol) {
  const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
  return (*hi - *lo) / *hi > tol;
}

std::optional<double> threshold_for(const ReducedProblem& pr) {
  if (!pr.orbit_volume)
    return std::nullopt;
  const double N = pr.codim();
  const double Nr = std::round(N);
  if (std::abs(N - Nr) > 1e-9 || Nr < 3)
    return std::nullopt;
  const double fmax = *std::max_element(pr.f_samples.begin(), pr.f_samples.end());
  return std::pow(*pr.orbit_volume, 2.0 / Nr) /
         (sobolev_constant(static_cast<int>(Nr)) *
          std::pow(fmax, 2.0 / pr.two_sharp()));
}

SolveReport make_report(const ReducedProblem& pr, std::vector<double> u,
                        const SolverConfig& cfg) {
  SolveReport r;
  r.quotient_value = quotient(pr, u);
  r.energy = weighted_power_integral(pr, u);
  r.el_residual = el_residual(pr, u);
  r.classification = is_nonconstant(u, cfg.classify_tol)
                         ? Classification::Nonconstant
                         : Classification::Constant;
  r.threshold = threshold_for(pr);
  r.below_threshold = r.threshold && r.quotient_value < *r.threshold;
  r.u = std::move(u);
  return r;
}

void normalize(const ReducedProblem& pr, Vec& u) {
  const double D = weighted_power_integral(pr, to_std(u));
  u /= std::pow(D, 1.0 / pr.two_sharp());
}

// Sobolev-preconditioned descent on I over positive functions, kept on the
// normalization w sum f u^{2#} h = 1.
int descend(const ReducedProblem& pr, Vec& u, const SolverConfig& cfg) {
  const int m = pr.grid();
  const double h = pr.h();
  Eigen::SimplicialLDLT<SpMat> pre(periodic_laplacian(m, h, pr.alpha) *
                                   (2.0 * pr.weight * h));
  if (pre.info() != Eigen::Success)
    throw DegeneracyError("descent preconditioner factorization failed");

  normalize(pr, u);
  double I = quotient(pr, to_std(u));
  double tau = 1.0;
  int it = 0;
  int quiet = 0;
  for (; it < cfg.descent_max_iter; ++it) {
    const Vec g = to_vec(quotient_gradient(pr, to_std(u)));
    const Vec d = -pre.solve(g);
    const double slope = g.dot(d);
    if (!(slope < 0.0))
      break;
    bool accepted = false;
    Vec trial;
    double I_trial = I;
    for (int k = 0; k < 40; ++k) {
      trial = (u + tau * d).cwiseMax(cfg.floor);
      normalize(pr, trial);
      I_trial = quotient(pr, to_std(trial));
      if (I_trial <= I + 1e-4 * tau * slope) {
        accepted = true;
        break;
      }
      tau *= 0.5;
    }
    if (!accepted)
      break;
    const double drop = (I - I_trial) / I;
    u = trial;
    I = I_trial;
    tau = std::min(2.0 * tau, 1.0);
    quiet = drop < cfg.descent_tol ? quiet + 1 : 0;
    if (quiet >= 5)
      break;
  }
  return it;
}

// Damped Newton on the Euler-Lagrange equation. When f is constant the
// problem is translation invariant up to discretization, and the system is
// bordered with a phase condition to pin the solution.
int newton(const ReducedProblem& pr, Vec& u, const SolverConfig& cfg) {
  const int m = pr.grid();
  const double h = pr.h();
  const SpMat base = periodic_laplacian(m, h, pr.alpha);
  Vec F = residual(pr, u);
  double res = sup_norm(F);
  int it = 0;
  for (; it < cfg.newton_max_iter && res > cfg.newton_tol; ++it) {
    const bool border =
        pr.f_constant() && is_nonconstant(to_std(u), cfg.classify_tol);
    const int size = border ? m + 1 : m;
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(3 * m + 2 * m + 1);
    for (int k = 0; k < base.outerSize(); ++k)
      for (SpMat::InnerIterator itr(base, k); itr; ++itr)
        t.emplace_back(itr.row(), itr.col(), itr.value());
    for (int i = 0; i < m; ++i)
      t.emplace_back(i, i,
                     -pr.p * pr.f_samples[i] * std::pow(u[i], pr.p - 1.0));
    Vec rhs = Vec::Zero(size);
    rhs.head(m) = -F;
    if (border) {
      Vec phi(m);
      for (int i = 0; i < m; ++i)
        phi[i] = (u[(i + 1) % m] - u[(i + m - 1) % m]) / (2.0 * h);
      phi /= phi.norm();
      for (int i = 0; i < m; ++i) {
        t.emplace_back(i, m, phi[i]);
        t.emplace_back(m, i, phi[i]);
      }
    }
    SpMat J(size, size);
    J.setFromTriplets(t.begin(), t.end());
    Eigen::SparseLU<SpMat> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success)
      throw ConvergenceError("Newton: singular Jacobian", to_std(u), res);
    const Vec step = lu.solve(rhs).head(m);
    if (!step.allFinite())
      throw ConvergenceError("Newton: non-finite step", to_std(u), res);

    double s = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30; ++k) {
      Vec trial = (u + s * step).cwiseMax(cfg.floor);
      Vec Ft = residual(pr, trial);
      const double rt = sup_norm(Ft);
      if (rt < res || k == 29) {
        accepted = rt < res;
        u = std::move(trial);
        F = std::move(Ft);
        res = rt;
        break;
      }
      s *= 0.5;
    }
    if (!accepted)
      break;
  }
  if (u.maxCoeff() < 1e3 * cfg.floor)
    throw DegeneracyError("Newton collapsed onto the zero solution");
  if (res > cfg.newton_tol)
    throw ConvergenceError("Newton: residual " + std::to_string(res) +
                               " above tolerance after " + std::to_string(it) +
                               " iterations",
                           to_std(u), res);
  return it;
}

} // namespace

ReducedProblem ReducedProblem::uniform(double length, double weight,
                                       double alpha, double p, int grid,
                                       double f) {
  if (grid < 1)
    throw DomainError("grid size must be positive");
  ReducedProblem pr;
  pr.length = length;
  pr.weight = weight;
  pr.alpha = alpha;
  pr.p = p;
  pr.f_samples.assign(static_cast<std::size_t>(grid), f);
  return pr;
}

bool ReducedProblem::f_constant() const {
  const auto [lo, hi] = std::minmax_element(f_samples.begin(), f_samples.end());
  return *lo == *hi;
}

void ReducedProblem::validate() const {
  if (!(length > 0.0))
    throw PreconditionError("circle length must be positive");
  if (!(weight > 0.0))
    throw PreconditionError("fiber weight must be positive");
  if (!(alpha > 0.0))
    throw PreconditionError("alpha must be positive");
  if (!(p > 1.0))
    throw PreconditionError("p must exceed 1");
  if (grid() < 64)
    throw PreconditionError("grid size must be at least 64");
  for (double v : f_samples)
    if (!(v > 0.0))
      throw PreconditionError("f samples must be positive");
  if (orbit_volume && !(*orbit_volume > 0.0))
    throw PreconditionError("orbit volume must be positive");
}

void SolverConfig::validate() const {
  if (starts.empty())
    throw PreconditionError("at least one start is required");
  if (!(floor > 0.0) || !(descent_tol > 0.0) || !(newton_tol > 0.0) ||
      !(classify_tol > 0.0))
    throw PreconditionError("solver tolerances must be positive");
  if (descent_max_iter < 0 || newton_max_iter < 1)
    throw PreconditionError("iteration limits must be positive");
  if (threads < 1)
    throw PreconditionError("thread count must be at least 1");
}

std::string_view to_string(StartKind s) {
  switch (s) {
  case StartKind::Constant:
    return "constant";
  case StartKind::Cosine1:
    return "cos1";
  case StartKind::Cosine2:
    return "cos2";
  case StartKind::Cosine3:
    return "cos3";
  case StartKind::Random:
    return "random";
  case StartKind::Localized:
    return "localized";
  }
  return "constant";
}

std::optional<StartKind> parse_start_kind(std::string_view s) {
  for (auto k : {StartKind::Constant, StartKind::Cosine1, StartKind::Cosine2,
                 StartKind::Cosine3, StartKind::Random, StartKind::Localized})
    if (to_string(k) == s)
      return k;
  return std::nullopt;
}

std::string_view to_string(Classification c) {
  return c == Classification::Constant ? "constant" : "nonconstant";
}

double quotient_numerator(const ReducedProblem& pr,
                          const std::vector<double>& u) {
  const int m = pr.grid();
  const double h = pr.h();
  double grad = 0.0, mass = 0.0;
  for (int i = 0; i < m; ++i) {
    const double d = (u[(i + 1) % m] - u[i]) / h;
    grad += d * d;
    mass += u[i] * u[i];
  }
  return pr.weight * (grad + pr.alpha * mass) * h;
}

double weighted_power_integral(const ReducedProblem& pr,
                               const std::vector<double>& u) {
  const double q = pr.two_sharp();
  double s = 0.0;
  for (int i = 0; i < pr.grid(); ++i)
    s += pr.f_samples[i] * std::pow(u[i], q);
  return pr.weight * s * pr.h();
}

double quotient(const ReducedProblem& pr, const std::vector<double>& u) {
  return quotient_numerator(pr, u) /
         std::pow(weighted_power_integral(pr, u), 2.0 / pr.two_sharp());
}

std::vector<double> quotient_gradient(const ReducedProblem& pr,
                                      const std::vector<double>& u) {
  const int m = pr.grid();
  const double h = pr.h();
  const double q = pr.two_sharp();
  const double N = quotient_numerator(pr, u);
  const double D = weighted_power_integral(pr, u);
  const double a = 1.0 / std::pow(D, 2.0 / q);
  const double b = (2.0 / q) * N * std::pow(D, -2.0 / q - 1.0);
  const Vec Au = apply_operator(pr, to_vec(u));
  std::vector<double> g(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double dN = 2.0 * pr.weight * h * Au[i];
    const double dD = pr.weight * h * q * pr.f_samples[i] * std::pow(u[i], q - 1.0);
    g[i] = a * dN - b * dD;
  }
  return g;
}

double el_residual(const ReducedProblem& pr, const std::vector<double>& u) {
  return sup_norm(residual(pr, to_vec(u)));
}

SolveReport constant_solution(const ReducedProblem& pr) {
  pr.validate();
  if (!pr.f_constant())
    throw PreconditionError("constant solution requires constant f");
  const double c = pr.f_samples.front();
  const double value = std::pow(pr.alpha / c, 1.0 / (pr.p - 1.0));
  SolverConfig cfg;
  auto r = make_report(pr, std::vector<double>(pr.f_samples.size(), value), cfg);
  // Closed form w l c (alpha/c)^{2#/(p-1)} avoids summation rounding.
  r.energy = pr.volume() * c * std::pow(value, pr.two_sharp());
  r.converged = true;
  r.start = StartKind::Constant;
  return r;
}

std::vector<double> initial_guess(const ReducedProblem& pr, StartKind kind,
                                  std::uint64_t seed) {
  const int m = pr.grid();
  const double h = pr.h();
  const double ell = pr.length;
  const double fmax = *std::max_element(pr.f_samples.begin(), pr.f_samples.end());
  const double base = std::pow(pr.alpha / fmax, 1.0 / (pr.p - 1.0));
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> u(static_cast<std::size_t>(m), base);
  auto cosine = [&](int mode) {
    for (int i = 0; i < m; ++i)
      u[i] = base * (1.0 + 0.3 * std::cos(two_pi * mode * i * h / ell));
  };
  switch (kind) {
  case StartKind::Constant:
    break;
  case StartKind::Cosine1:
    cosine(1);
    break;
  case StartKind::Cosine2:
    cosine(2);
    break;
  case StartKind::Cosine3:
    cosine(3);
    break;
  case StartKind::Random: {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ph(0.0, two_pi);
    std::vector<double> amp(6), phase(6);
    for (int k = 0; k < 6; ++k) {
      amp[k] = nd(rng) / (k + 1);
      phase[k] = ph(rng);
    }
    std::vector<double> s(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < 6; ++k)
        s[i] += amp[k] * std::cos(two_pi * (k + 1) * i * h / ell + phase[k]);
    const double span = *std::max_element(s.begin(), s.end()) -
                        *std::min_element(s.begin(), s.end());
    for (int i = 0; i < m; ++i)
      u[i] = base * (1.0 + 0.5 * (s[i] - *std::min_element(s.begin(), s.end())) /
                               (span > 0 ? span : 1.0));
    break;
  }
  case StartKind::Localized: {
    // Line soliton of -u'' + alpha u = fmax u^p centred on the circle.
    const double q = pr.p - 1.0;
    const double amp = std::pow((pr.p + 1.0) * pr.alpha / (2.0 * fmax), 1.0 / q);
    const double k = q * std::sqrt(pr.alpha) / 2.0;
    for (int i = 0; i < m; ++i) {
      const double x = k * (i * h - ell / 2.0);
      u[i] = std::max(amp * std::pow(1.0 / std::cosh(x), 2.0 / q), 1e-12);
    }
    break;
  }
  }
  return u;
}

SolveReport solve_from(const ReducedProblem& pr, std::vector<double> u0,
                       StartKind kind, const SolverConfig& cfg) {
  pr.validate();
  cfg.validate();
  if (static_cast<int>(u0.size()) != pr.grid())
    throw PreconditionError("initial guess has the wrong grid size");
  Vec u = to_vec(u0).cwiseMax(cfg.floor);
  const int dit = descend(pr, u, cfg);

  // Scale the constrained critical point onto the unnormalized equation.
  const auto us = to_std(u);
  const double lambda =
      quotient_numerator(pr, us) / weighted_power_integral(pr, us);
  u *= std::pow(lambda, 1.0 / (pr.p - 1.0));

  const int nit = newton(pr, u, cfg);
  auto r = make_report(pr, to_std(u), cfg);
  r.converged = r.el_residual <= cfg.newton_tol;
  r.start = kind;
  r.seed = cfg.seed;
  r.descent_iterations = dit;
  r.newton_iterations = nit;
  return r;
}

SolveReport minimize(const ReducedProblem& pr, const SolverConfig& cfg) {
  pr.validate();
  cfg.validate();

  struct Outcome {
    std::optional<SolveReport> report;
    std::exception_ptr error;
  };
  auto run = [&](StartKind k) {
    Outcome o;
    try {
      o.report = solve_from(pr, initial_guess(pr, k, cfg.seed), k, cfg);
    } catch (const NumericError&) {
      o.error = std::current_exception();
    }
    return o;
  };

  std::vector<Outcome> outcomes;
  if (cfg.threads > 1) {
    std::vector<std::future<Outcome>> jobs;
    for (auto k : cfg.starts)
      jobs.push_back(std::async(std::launch::async, run, k));
    for (auto& j : jobs)
      outcomes.push_back(j.get());
  } else {
    for (auto k : cfg.starts)
      outcomes.push_back(run(k));
  }

  const SolveReport* best = nullptr;
  for (const auto& o : outcomes)
    if (o.report && o.report->converged &&
        (!best || o.report->quotient_value < best->quotient_value))
      best = &*o.report;
  if (best)
    return *best;

  // Every start failed: surface the failure with the lowest residual.
  std::exception_ptr chosen;
  double best_res = kInf;
  for (const auto& o : outcomes) {
    if (!o.error)
      continue;
    try {
      std::rethrow_exception(o.error);
    } catch (const ConvergenceError& e) {
      if (e.best_residual() < best_res) {
        best_res = e.best_residual();
        chosen = o.error;
      }
    } catch (const NumericError&) {
      if (!chosen)
        chosen = o.error;
    }
  }
  if (chosen)
    std::rethrow_exception(chosen);
  throw ConvergenceError("no start converged", {}, kInf);
}

ProofChainAudit proof_chain_diagnostics(const SolveReport& report,
                                        const ReducedProblem& pr,
                                        const EquationParams& params,
                                        const GenericIneqParams& gen) {
  ProofChainAudit out;
  if (!report.converged) {
    out.generic_inequality_bound.note = "report did not converge";
    out.hoelder_min_f_bound.note = "report did not converge";
    return out;
  }
  if (std::abs(params.two_sharp() - pr.two_sharp()) > 1e-12 * pr.two_sharp())
    throw PreconditionError("equation parameters do not match the problem's "
                            "critical exponent");
  const double N = params.codim();
  const double q = pr.two_sharp();
  const double h = pr.h();
  const auto& u = report.u;
  double l2 = 0.0, fint = 0.0;
  for (int i = 0; i < pr.grid(); ++i) {
    l2 += u[i] * u[i];
    fint += pr.f_samples[i];
  }
  l2 *= pr.weight * h;
  fint *= pr.weight * h;
  const double fmin = *std::min_element(pr.f_samples.begin(), pr.f_samples.end());
  const double I = report.quotient_value;

  auto& g4 = out.generic_inequality_bound;
  g4.lhs = l2;
  const double crit = gen.crit;
  if (!(crit > 2.0 && crit < 4.0)) {
    g4.note = "requires crit in (2, 4)";
  } else if (pr.alpha < gen.factor() * gen.D) {
    g4.note = "alpha below the second multiplicity condition";
  } else {
    g4.applicable = true;
    g4.rhs = std::pow(4.0 * gen.P / ((4.0 - crit) * crit), crit / 2.0) *
             std::pow(I, (crit - 2.0 + N) / 2.0) *
             std::pow(fint, (crit - 2.0) / q);
    g4.holds = g4.lhs <= g4.rhs * (1.0 + 1e-9);
  }

  auto& g6 = out.hoelder_min_f_bound;
  g6.lhs = l2;
  g6.applicable = true;
  g6.rhs = std::pow(I, (N - 2.0) / 2.0) / fmin * std::pow(fint, 2.0 / N);
  // Equality for constant u and f; allow rounding.
  g6.holds = g6.lhs <= g6.rhs * (1.0 + 1e-9);
  return out;
}

EnergyOrdering energy_separation(const SolveReport& a, const SolveReport& b) {
  if (!a.converged || !b.converged)
    throw PreconditionError("energy separation requires converged reports");
  EnergyOrdering o;
  o.margin = b.energy - a.energy;
  o.relative_margin = o.margin / std::max(std::abs(a.energy), std::abs(b.energy));
  o.separated = std::abs(o.relative_margin) > 1e-9;
  o.first_lower = o.separated && o.margin > 0.0;
  o.first_below_threshold = a.below_threshold;
  o.second_at_or_above_first_threshold =
      a.threshold && b.quotient_value >= *a.threshold;
  return o;
}

} // namespace critmult
