#include "critmult/best_constants.hpp"
#include "critmult/cli.hpp"
#include "critmult/conditions.hpp"
#include "critmult/errors.hpp"
#include "critmult/expansion_lab.hpp"
#include "critmult/solver_1d.hpp"
#include "example_forms.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace critmult;
using oracle::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::abs(b);
}

// Reports from the solver criteria, audited afterwards.
struct Audited {
  SolveReport report;
  ReducedProblem problem;
  EquationParams params;
  GenericIneqParams gen;
  std::string label;
};
std::vector<Audited> g_reports;

void hopf_interval(Outcome& o) {
  RunRequest req;
  req.command = Command::Interval;
  req.parameters = {{"example", "hopf"}, {"t", "8"}};
  const auto res = run(req);
  o.require(res.status == 0, "cli exit status");
  const auto j = nlohmann::json::parse(res.output);
  const double lo = j["lo"], hi = j["hi"];
  o.require(close(lo, 3.0 / 16, 1e-15), "lo = 3/16");
  o.require(hi == 0.75 && j["hi_strict"] == true && j["lo_strict"] == false, "[., 3/4)");
  double worst = 0.0;
  for (double t : {1.5, 2.0, 8.0, 100.0}) {
    auto p = default_params(ExampleId::Hopf);
    p.t = t;
    const auto I = example_interval(ExampleId::Hopf, p, FProfile::constant()).interval;
    const auto want = oracle::hopf(t);
    worst = std::max(worst, std::abs(I.lo - want.lo) / std::max(1.0, want.lo));
    o.require(close(I.lo, want.lo, 1e-15) && I.hi == want.hi && I.hi_strict,
              "t = " + std::to_string(t));
  }
  o.detail << "lo=" << lo << " hi=" << hi << " worst err=" << worst;
}

void example_table(Outcome& o) {
  int checked = 0, rejected = 0;
  double worst = 0.0;
  auto check = [&](ExampleId id, ExampleParams p, const oracle::Interval& want) {
    const auto I = example_interval(id, p, default_f_profile(id, p)).interval;
    const double err = std::max(std::abs(I.lo - want.lo) / std::max(1.0, std::abs(want.lo)),
                                std::abs(I.hi - want.hi) / std::max(1.0, std::abs(want.hi)));
    worst = std::max(worst, err);
    o.require(!I.empty && err < 1e-12 && I.hi_strict == want.hi_strict,
              std::string(to_string(id)));
    ++checked;
  };
  auto outside = [&](ExampleId id, ExampleParams p) {
    bool ok = false;
    try {
      ok = example_interval(id, p, default_f_profile(id, p)).interval.empty;
    } catch (const Error&) {
      ok = true;
    }
    o.require(ok, std::string(to_string(id)) + " outside window");
    rejected += ok;
  };
  using E = ExampleId;
  for (int n : {5, 7, 9}) {
    auto p = default_params(E::SphereFree);
    p.n = n;
    check(E::SphereFree, p, oracle::sphere_free(n));
  }
  for (auto [n, t] : {std::pair{5, 1.0}, {6, 2.0}, {7, 0.8}}) {
    auto p = default_params(E::CircleSphereFinite);
    p.n = n;
    p.t = t;
    check(E::CircleSphereFinite, p, oracle::circle_sphere_finite(n, t));
  }
  for (auto [n, a, b2] : {std::tuple{10, 4.0, 0.08}, {10, 5.0, 0.07}, {11, 5.0, 0.06}}) {
    auto p = default_params(E::CircleSphereSphere);
    p.n = n;
    p.a = a;
    p.b2 = b2;
    check(E::CircleSphereSphere, p, oracle::circle_sphere_sphere(n, b2));
  }
  for (auto [n, t] : {std::pair{5, 40.0}, {5, 60.0}, {6, 40.0}}) {
    auto p = default_params(E::CircleSphereConstant);
    p.n = n;
    p.t = t;
    check(E::CircleSphereConstant, p, oracle::circle_sphere_constant(n, t, 1, 2));
  }
  for (double t : {2.0, 8.0, 100.0}) {
    auto p = default_params(E::Hopf);
    p.t = t;
    check(E::Hopf, p, oracle::hopf(t));
  }
  for (auto [n, t] : {std::pair{6, 10.0}, {5, 5.0}, {7, 20.0}}) {
    auto p = default_params(E::CircleSphereOrthogonal);
    p.n = n;
    p.t = t;
    check(E::CircleSphereOrthogonal, p, oracle::circle_sphere_orthogonal(n, t));
  }

  auto p = default_params(E::CircleSphereFinite);
  p.t = 0.3;
  outside(E::CircleSphereFinite, p);
  p = default_params(E::CircleSphereSphere);
  p.b2 = 0.1;
  outside(E::CircleSphereSphere, p);
  p.b2 = 0.06;
  outside(E::CircleSphereSphere, p);
  for (int n : {5, 6}) {
    p = default_params(E::CircleSphereOrthogonal);
    p.n = n;
    p.t = 0.9 * oracle::orthogonal_t_threshold(n);
    outside(E::CircleSphereOrthogonal, p);
  }
  p = default_params(E::Hopf);
  p.t = 1.0;
  outside(E::Hopf, p);
  p = default_params(E::SphereFree);
  p.n = 6;
  outside(E::SphereFree, p);
  o.detail << checked << " points, worst rel err=" << worst << ", " << rejected
           << " out-of-window cases rejected";
}

FProfile random_profile(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  FProfile f;
  f.f_max = f.f_at_peak = 1.0 + 4 * u(rng);
  f.f_avg = f.f_max * u(rng);
  f.f_min = f.f_avg * u(rng);
  f.vanishing_order = 10;
  return f;
}

void specialization(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  auto endpoint_diff = [](const GuaranteedInterval& a, const GuaranteedInterval& b) {
    auto d = [](double x, double y) {
      if (x == y)
        return 0.0;
      return std::abs(x - y) / std::abs(y);
    };
    return std::max(d(a.lo, b.lo), d(a.hi, b.hi));
  };
  for (int i = 0; i < 100; ++i) {
    const int n = 5 + i % 10;
    const EquationParams eq(n, 0);
    const double A1 = 0.5 + 3 * u(rng), A2 = A1 * (1.05 + 3 * u(rng)), V = 1 + 100 * u(rng);
    const double b0 = 0.5 + 5 * u(rng), b2 = 0.5 + 10 * u(rng);
    const ConstantBound B0(b0, b0 * (1 + 0.3 * u(rng))), B0G2(b2, b2 * (1 + 0.3 * u(rng)));
    const auto f = random_profile(rng);
    const auto direct = sobolev_multiplicity_interval(eq, A1, A2, V, B0, B0G2, f);
    const auto generic = generic_multiplicity_interval(eq, sobolev_specialization(eq, B0.hi()),
                                                       A1, A2, V, B0G2, f);
    const double d = endpoint_diff(generic, direct);
    worst = std::max(worst, d);
    o.require(d < 1e-12 && generic.empty == direct.empty, "full-Sobolev set " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const int k = i % 4, N = 5 + (i / 4) % 8;
    const EquationParams eq(N + k, k);
    const double A1 = 0.5 + 3 * u(rng), A2 = A1 * (1.05 + 3 * u(rng)), V = 1 + 100 * u(rng);
    const double b2 = 0.5 + 10 * u(rng);
    const ConstantBound B0G2(b2, b2 * (1 + 0.3 * u(rng)));
    const auto f = random_profile(rng);
    const auto direct = invariant_multiplicity_interval(eq, A1, A2, V, B0G2, f);
    const auto generic = generic_multiplicity_interval(
        eq, invariant_specialization(eq, A2, B0G2.hi()), A1, A2, V, B0G2, f);
    const double d = endpoint_diff(generic, direct);
    worst = std::max(worst, d);
    o.require(d < 1e-12 && generic.empty == direct.empty, "invariant set " + std::to_string(i));
  }
  o.detail << "200 sets, worst endpoint rel diff=" << worst;
}

void volume_gap_consistency(Outcome& o) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = i % 4, N = 3 + (i / 4) % 10;
    const EquationParams eq(N + k, k);
    const double A1 = 0.5 + 3 * u(rng), A2 = A1 * (1.05 + 3 * u(rng)), V = 1 + 100 * u(rng);
    const double b1 = 0.5 + 10 * u(rng), b2 = 0.5 + 10 * u(rng);
    const ConstantBound B0G1(b1, b1 * (1 + 0.3 * u(rng))), B0G2(b2, b2 * (1 + 0.3 * u(rng)));
    const auto single = volume_gap_interval(eq, A1, A2, V, B0G2, FProfile::constant());
    const auto pair = constant_weight_intervals(eq, A1, A2, V, B0G1, B0G2);
    equal += single.lo == pair.double_interval.lo;
  }
  o.require(equal == 100, "bitwise equality");
  o.detail << equal << "/100 lower endpoints identical";
}

void solver_correctness(Outcome& o) {
  // a) constant solutions.
  for (auto [ell, alpha] : {std::pair{2 * pi, 1.0}, {1.0, 16.0}, {3.0, 2.5}}) {
    const auto pr = ReducedProblem::uniform(ell, 1.0, alpha, 5.0, 64);
    const auto c = constant_solution(pr);
    o.require(c.el_residual < 1e-10, "constant residual");
    g_reports.push_back({c, pr, EquationParams(4, 1), {6.0, 1.0, 0.0}, "constant"});
  }

  // c) gradient against central differences.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ur(0.5, 1.5);
  auto gp = ReducedProblem::uniform(3.0, 2.0, 1.7, 7.0 / 3, 64);
  for (auto& v : gp.f_samples)
    v = 0.5 + ur(rng);
  double grad_err = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> u(64);
    for (auto& x : u)
      x = ur(rng);
    const auto g = quotient_gradient(gp, u);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double h = 1e-6 * u[i];
      auto a = u, b = u;
      a[i] += h;
      b[i] -= h;
      const double fd = (quotient(gp, a) - quotient(gp, b)) / (2 * h);
      num += (fd - g[i]) * (fd - g[i]);
      den += g[i] * g[i];
    }
    grad_err = std::max(grad_err, std::sqrt(num / den));
  }
  o.require(grad_err < 1e-6, "gradient");

  // d) bifurcation sweep; p = 7/3, circle length pi: (p - 1) alpha = (2 pi / l)^2
  // at alpha = 3. Functions on S^1(1/2) x S^4 satisfy the full Sobolev
  // inequality with P = K_5 and D = the upper bound of B_0.
  const double ell = pi, p = 7.0 / 3;
  const double star = std::pow(2 * pi / ell, 2) / (p - 1);
  const GenericIneqParams gen{10.0 / 3, sobolev_constant(5),
                              b0_bounds_circle_sphere(ell / (2 * pi), 5).hi()};
  const double step = 0.025;
  std::optional<double> first_nonconstant;
  double last_constant = 0.0;
  for (int j = 0; j < 80; ++j) {
    const double alpha = 2.0 + (j + 0.5) * step;
    const auto pr = ReducedProblem::uniform(ell, sphere_volume(4), alpha, p, 256);
    const auto r = minimize(pr);
    o.require(r.converged, "sweep convergence");
    if (r.classification == Classification::Nonconstant) {
      if (!first_nonconstant)
        first_nonconstant = alpha;
    } else {
      last_constant = alpha;
    }
    g_reports.push_back({r, pr, EquationParams(5, 0), gen, "sweep"});
  }
  o.require(first_nonconstant.has_value(), "nonconstant branch found");
  if (first_nonconstant) {
    o.require(last_constant < *first_nonconstant, "single switch");
    o.require(std::abs(*first_nonconstant - star) <= step && std::abs(last_constant - star) <= step,
              "switch within one step");
  }

  // b) energy identity on every converged report so far.
  double id_err = 0.0;
  for (const auto& a : g_reports)
    if (a.report.converged)
      id_err = std::max(id_err, rel_close(a.report.energy, 0, 0)
                                    ? 0.0
                                    : std::abs(a.report.energy -
                                               std::pow(a.report.quotient_value,
                                                        a.problem.codim() / 2)) /
                                          a.report.energy);
  o.require(id_err < 1e-8, "energy identity");
  o.detail << "grad err=" << grad_err << ", identity err=" << id_err << ", switch in ("
           << last_constant << ", " << first_nonconstant.value_or(-1) << ") around " << star;
}

void energy_separation_run(Outcome& o) {
  auto params = default_params(ExampleId::CircleSphereConstant);
  params.n = 5;
  params.t = 40;
  params.A1 = 1;
  params.A2 = 2;
  const auto ex = example_interval(ExampleId::CircleSphereConstant, params, FProfile::constant());
  const double alpha = 0.5 * (ex.interval.lo + ex.interval.hi);
  const EquationParams eq(5, 0, alpha);
  const double p = eq.p();

  auto problem = [&](int A, int grid) {
    auto pr = ReducedProblem::uniform(2 * pi * params.t / A, A * sphere_volume(4), alpha, p, grid);
    pr.orbit_volume = A;
    return pr;
  };
  SolverConfig cfg;
  cfg.threads = 6;
  const auto p1 = problem(1, 4096), p2 = problem(2, 2048);
  const auto u1 = minimize(p1, cfg);
  const auto u2 = minimize(p2, cfg);
  const auto ubar = constant_solution(p1);

  // Invariant inequality of each group: P = K_5 A^{-2/5}, D = B_{0,G} upper bound.
  auto gen_for = [&](int A) {
    return GenericIneqParams{eq.two_sharp(), sobolev_constant(5) * std::pow(A, -0.4),
                             b0_bounds_circle_sphere(params.t / A, 5).hi()};
  };
  g_reports.push_back({u1, p1, eq, gen_for(1), "u1"});
  g_reports.push_back({u2, p2, eq, gen_for(2), "u2"});
  g_reports.push_back({ubar, p1, eq, gen_for(1), "constant"});

  const auto s12 = energy_separation(u1, u2);
  const auto s2c = energy_separation(u2, ubar);
  const double thr = faget_threshold(eq, 1.0, FProfile::constant());
  o.require(u1.converged && u2.converged, "convergence");
  o.require(s12.separated && s12.first_lower && s12.relative_margin > 1e-3, "E(u1) < E(u2)");
  o.require(s2c.separated && s2c.first_lower && s2c.relative_margin > 1e-3, "E(u2) < E(const)");
  o.require(u1.quotient_value < thr && u1.below_threshold, "I(u1) below threshold");
  for (const auto* r : {&u1, &u2, &ubar})
    o.require(rel_close(r->energy, std::pow(r->quotient_value, 2.5), 1e-8), "energy identity");
  o.detail << "alpha=" << alpha << " E(u1)=" << u1.energy << " E(u2)=" << u2.energy
           << " E(const)=" << ubar.energy << " I(u1)=" << u1.quotient_value
           << " threshold=" << thr << " I(u2)>=threshold: "
           << (s12.second_at_or_above_first_threshold ? "yes" : "no");
}

void proof_chain(Outcome& o) {
  int audited = 0, generic_checked = 0;
  double tightest = 0.0;
  for (const auto& a : g_reports) {
    if (!a.report.converged)
      continue;
    ++audited;
    const auto audit = proof_chain_diagnostics(a.report, a.problem, a.params, a.gen);
    o.require(audit.hoelder_min_f_bound.holds, a.label + " min-f bound");
    tightest = std::max(tightest, audit.hoelder_min_f_bound.lhs / audit.hoelder_min_f_bound.rhs);
    if (audit.generic_inequality_bound.applicable) {
      ++generic_checked;
      o.require(audit.generic_inequality_bound.holds, a.label + " generic bound");
    }
  }
  o.require(audited > 0, "reports present");
  o.detail << audited << " reports audited, generic-inequality bound applicable on "
           << generic_checked << ", max lhs/rhs of the min-f bound=" << tightest;
}

void expansion(Outcome& o) {
  ExpansionConfig c;
  c.N = 6;
  c.alpha = 1.0;
  c.epsilons = default_epsilons(1.0);
  const auto fit = fit_and_compare(c);
  o.require(rel_close(fit.c1_fitted, 5.0 / 12, 0.1), "c1 within 10%");
  o.require(rel_close(fit.limit_fitted, 1.0 / oracle::sobolev(6), 1e-3), "limit within 0.1%");
  int agree = 0;
  for (double alpha : {0.25, 1.0, 4.0})
    for (double q : {0.0, 1.0, 4.0}) {
      c.alpha = alpha;
      c.q = q;
      const auto g = fit_and_compare(c);
      agree += (g.c1_fitted > 0) == (g.c1_predicted > 0);
    }
  o.require(agree == 9, "sign agreement");
  o.detail << "c1 fitted=" << fit.c1_fitted << " (predicted 5/12), limit=" << fit.limit_fitted
           << " vs " << 1.0 / oracle::sobolev(6) << ", signs " << agree << "/9";
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"hopf interval closed form", 1.0, hopf_interval},
      {"six example intervals and windows", 1.0, example_table},
      {"generic engine specializations", 1.0, specialization},
      {"weighted and constant-weight gap agree at f = 1", 1.0, volume_gap_consistency},
      {"solver correctness", 10.0, solver_correctness},
      {"energy separation on the constant-weight circle example", 30.0, energy_separation_run},
      {"proof-chain L2 bounds on computed solutions", 5.0, proof_chain},
      {"expansion lab coefficient and limit", 20.0, expansion},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit_s) {
      o.pass = false;
      o.detail << " [over time limit " << c.limit_s << " s]";
    }
    failed += !o.pass;
    std::printf("%s [%d/8] %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", idx, c.name, dt,
                o.detail.str().c_str());
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
