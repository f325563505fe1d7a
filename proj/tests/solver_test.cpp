#include "critmult/conditions.hpp"
#include "critmult/errors.hpp"
#include "critmult/solver_1d.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace critmult;
using oracle::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> random_positive(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<double> v(m);
  for (auto& x : v)
    x = u(rng);
  return v;
}

// Minimizer on the circle of length 2 pi with p = 5: constant exactly when
// (p - 1) alpha <= 1, the first nonzero eigenvalue of -d^2/ds^2.
ReducedProblem unit_circle(double alpha, int grid = 128) {
  return ReducedProblem::uniform(2 * pi, 1.0, alpha, 5.0, grid);
}

} // namespace

TEST_CASE("constant solution closed forms") {
  auto a = constant_solution(ReducedProblem::uniform(2 * pi, 1, 1, 5, 64));
  CHECK(a.u.front() == doctest::Approx(1.0));
  CHECK(rel(a.energy, 2 * pi) < 1e-14);
  CHECK(a.el_residual < 1e-10);

  auto b = constant_solution(ReducedProblem::uniform(1, 1, 16, 5, 64));
  CHECK(b.u.front() == doctest::Approx(2.0));
  CHECK(rel(b.energy, 64.0) < 1e-14);
  CHECK(b.el_residual < 1e-10);
  CHECK(rel(b.energy, std::pow(b.quotient_value, 1.5)) < 1e-12);

  auto pr = ReducedProblem::uniform(1, 1, 1, 5, 64);
  pr.f_samples[3] = 2.0;
  CHECK_THROWS_AS(constant_solution(pr), PreconditionError);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(minimize(ReducedProblem::uniform(1, 1, 1, 5, 32)), PreconditionError);
  CHECK_THROWS_AS(minimize(ReducedProblem::uniform(1, 1, -1, 5, 64)), PreconditionError);
  CHECK_THROWS_AS(minimize(ReducedProblem::uniform(1, 1, 1, 1, 64)), PreconditionError);
  SolverConfig cfg;
  cfg.starts.clear();
  CHECK_THROWS_AS(minimize(ReducedProblem::uniform(1, 1, 1, 5, 64), cfg), PreconditionError);
}

TEST_CASE("analytic gradient matches central differences") {
  std::mt19937_64 rng(3);
  auto pr = ReducedProblem::uniform(3.0, 2.0, 1.7, 7.0 / 3, 64);
  std::uniform_real_distribution<double> fu(0.5, 2.0);
  for (auto& v : pr.f_samples)
    v = fu(rng);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_positive(pr.grid(), rng);
    const auto g = quotient_gradient(pr, u);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < pr.grid(); ++i) {
      const double h = 1e-6 * u[i];
      auto up = u, dn = u;
      up[i] += h;
      dn[i] -= h;
      const double fd = (quotient(pr, up) - quotient(pr, dn)) / (2 * h);
      num += (fd - g[i]) * (fd - g[i]);
      den += g[i] * g[i];
    }
    worst = std::max(worst, std::sqrt(num / den));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("quotient is homogeneous of degree zero") {
  std::mt19937_64 rng(4);
  const auto pr = ReducedProblem::uniform(2.0, 1.5, 0.8, 5.0, 64);
  const auto u = random_positive(64, rng);
  const double I = quotient(pr, u);
  for (double c : {0.5, 2.0, 10.0}) {
    auto v = u;
    for (auto& x : v)
      x *= c;
    CHECK(rel(quotient(pr, v), I) < 1e-12);
  }
}

TEST_CASE("classification on either side of the first eigenvalue") {
  const auto below = minimize(unit_circle(0.1));
  CHECK(below.classification == Classification::Constant);
  CHECK(below.el_residual < 1e-10);

  const auto above = minimize(unit_circle(1.0));
  CHECK(above.classification == Classification::Nonconstant);
  const auto c = constant_solution(unit_circle(1.0));
  CHECK(above.quotient_value < c.quotient_value);
  CHECK(above.energy < c.energy);
}

TEST_CASE("scaled starts give the same quotient value") {
  const auto pr = unit_circle(1.0);
  auto u0 = initial_guess(pr, StartKind::Cosine1, 1);
  auto u3 = u0;
  for (auto& x : u3)
    x *= 3.0;
  const auto a = solve_from(pr, u0, StartKind::Cosine1);
  const auto b = solve_from(pr, u3, StartKind::Cosine1);
  CHECK(rel(a.quotient_value, b.quotient_value) < 1e-10);
}

TEST_CASE("circular shifts of the start leave I unchanged") {
  const auto pr = unit_circle(1.0);
  const auto u0 = initial_guess(pr, StartKind::Random, 9);
  const auto base = solve_from(pr, u0, StartKind::Random);
  for (int s : {1, 17, 64}) {
    auto v = u0;
    std::rotate(v.begin(), v.begin() + s, v.end());
    const auto r = solve_from(pr, v, StartKind::Random);
    CHECK(std::abs(r.quotient_value - base.quotient_value) < 1e-10);
  }
}

TEST_CASE("energy identity on converged reports") {
  std::vector<ReducedProblem> problems = {unit_circle(0.1), unit_circle(1.0),
                                          ReducedProblem::uniform(pi, 3.0, 3.5, 7.0 / 3, 128)};
  auto bump = ReducedProblem::uniform(5.0, 1.0, 2.0, 7.0 / 3, 128);
  for (int i = 0; i < bump.grid(); ++i)
    bump.f_samples[i] = 1.0 + 0.5 * std::exp(4 * (std::cos(2 * pi * i / bump.grid() - pi) - 1));
  problems.push_back(bump);
  for (const auto& pr : problems) {
    const auto r = minimize(pr);
    REQUIRE(r.converged);
    CHECK(rel(r.energy, std::pow(r.quotient_value, pr.codim() / 2)) < 1e-8);
  }
}

TEST_CASE("threshold comparison uses the existence threshold") {
  auto pr = ReducedProblem::uniform(2 * pi * 40, oracle::sphere_volume(4), 2.18, 7.0 / 3, 512);
  pr.orbit_volume = 1.0;
  const auto r = minimize(pr);
  REQUIRE(r.threshold);
  CHECK(rel(*r.threshold, faget_threshold(EquationParams(5, 0), 1.0, FProfile::constant())) <
        1e-14);
  CHECK(r.below_threshold);
}

TEST_CASE("grid refinement converges at second order") {
  // Long circle with the orbit weight of the Hopf configuration.
  std::vector<double> I;
  for (int m : {256, 512, 1024}) {
    const auto pr = ReducedProblem::uniform(2 * pi * 8, 2 * pi * pi, 0.5, 5.0, m);
    const auto r = minimize(pr);
    REQUIRE(r.classification == Classification::Nonconstant);
    I.push_back(r.quotient_value);
  }
  const double order = std::log2((I[0] - I[1]) / (I[1] - I[2]));
  CHECK(order >= 1.8);
}

TEST_CASE("bifurcation from the constant solution") {
  // (p - 1) alpha = 1 at alpha = 0.25.
  const double step = 0.005;
  std::optional<double> first_nonconstant;
  double last_constant = 0.0;
  for (int j = 0; j < 80; ++j) {
    const double alpha = 0.05 + (j + 0.5) * step;
    const auto r = minimize(unit_circle(alpha));
    if (r.classification == Classification::Nonconstant) {
      if (!first_nonconstant)
        first_nonconstant = alpha;
    } else {
      last_constant = alpha;
    }
  }
  REQUIRE(first_nonconstant);
  CHECK(last_constant < *first_nonconstant);
  CHECK(std::abs(*first_nonconstant - 0.25) <= step);
  CHECK(std::abs(last_constant - 0.25) <= step);
}

TEST_CASE("Newton failure carries the best iterate") {
  SolverConfig cfg;
  cfg.descent_max_iter = 0;
  cfg.newton_max_iter = 1;
  const auto pr = unit_circle(1.0);
  try {
    solve_from(pr, initial_guess(pr, StartKind::Cosine3, 1), StartKind::Cosine3, cfg);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_iterate().size() == 128u);
    CHECK(e.best_residual() > cfg.newton_tol);
  }
}

TEST_CASE("proof-chain audit") {
  SUBCASE("constant solution meets the Hoelder bound with equality") {
    auto pr = ReducedProblem::uniform(2.0, 3.0, 1.5, 5.0, 64);
    const auto c = constant_solution(pr);
    const auto audit = proof_chain_diagnostics(c, pr, EquationParams(4, 1), {6.0, 1.0, 0.0});
    const double N = 3;
    const double wl = pr.volume();
    const double lhs = wl * std::pow(1.5, 2.0 / 4);
    const double rhs = std::pow(c.quotient_value, (N - 2) / 2) * std::pow(wl, 2 / N);
    CHECK(rel(audit.hoelder_min_f_bound.lhs, lhs) < 1e-12);
    CHECK(rel(audit.hoelder_min_f_bound.rhs, rhs) < 1e-12);
    CHECK(audit.hoelder_min_f_bound.holds);
    // crit = 2# = 6 lies outside (2, 4).
    CHECK_FALSE(audit.generic_inequality_bound.applicable);
  }
  SUBCASE("nonconstant solutions pass both bounds") {
    const double ell = pi, A = 1.0;
    const auto pr = ReducedProblem::uniform(ell, oracle::sphere_volume(4), 3.5, 7.0 / 3, 256);
    const auto r = minimize(pr);
    REQUIRE(r.classification == Classification::Nonconstant);
    const double D = 9.0 / 4 + pi * pi / (ell * ell);
    const GenericIneqParams gen{10.0 / 3, oracle::sobolev(5) * std::pow(A, -0.4), D};
    REQUIRE(pr.alpha >= gen.factor() * D);
    const auto audit = proof_chain_diagnostics(r, pr, EquationParams(5, 0), gen);
    CHECK(audit.generic_inequality_bound.applicable);
    CHECK(audit.generic_inequality_bound.holds);
    CHECK(audit.hoelder_min_f_bound.holds);
  }
  SUBCASE("alpha below the second condition is not applicable") {
    const auto pr = ReducedProblem::uniform(pi, oracle::sphere_volume(4), 1.0, 7.0 / 3, 128);
    const auto r = minimize(pr);
    const auto audit =
        proof_chain_diagnostics(r, pr, EquationParams(5, 0), {10.0 / 3, 0.1, 2.0});
    CHECK_FALSE(audit.generic_inequality_bound.applicable);
  }
  SUBCASE("mismatched exponent is rejected") {
    const auto pr = unit_circle(1.0, 64);
    const auto c = constant_solution(pr);
    CHECK_THROWS_AS(proof_chain_diagnostics(c, pr, EquationParams(5, 0), {3.0, 1.0, 0.0}),
                    PreconditionError);
  }
}

TEST_CASE("energy separation verdicts") {
  const auto pr = unit_circle(1.0);
  const auto r = minimize(pr);
  const auto same = energy_separation(r, r);
  CHECK_FALSE(same.separated);
  const auto c = constant_solution(pr);
  const auto o = energy_separation(r, c);
  CHECK(o.separated);
  CHECK(o.first_lower);
  CHECK(o.margin > 0);
  auto bad = r;
  bad.converged = false;
  CHECK_THROWS_AS(energy_separation(bad, c), PreconditionError);
}

TEST_CASE("start kinds round-trip") {
  for (auto k : SolverConfig{}.starts)
    CHECK(parse_start_kind(to_string(k)) == k);
  CHECK_FALSE(parse_start_kind("sine"));
}
