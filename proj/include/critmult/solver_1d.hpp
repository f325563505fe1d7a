#pragma once

#include "critmult/conditions.hpp"
#include "critmult/constants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critmult {

/// -u'' + alpha u = f u^p on a circle of length `length`, every integral
/// carrying the fiber factor `weight`.
struct ReducedProblem {
  double length = 2.0 * 3.141592653589793;
  double weight = 1.0;
  double alpha = 1.0;
  double p = 5.0;
  std::vector<double> f_samples;
  // Minimal orbit volume A of the symmetry group the circle functions are
  // invariant under; enables the existence-threshold comparison.
  std::optional<double> orbit_volume;

  static ReducedProblem uniform(double length, double weight, double alpha,
                                double p, int grid, double f = 1.0);

  double two_sharp() const { return p + 1.0; }
  // Quotient dimension N recovered from 2# = 2N/(N-2).
  double codim() const { return 2.0 * two_sharp() / (two_sharp() - 2.0); }
  int grid() const { return static_cast<int>(f_samples.size()); }
  double h() const { return length / grid(); }
  double volume() const { return weight * length; }
  bool f_constant() const;
  void validate() const;
};

enum class StartKind { Constant, Cosine1, Cosine2, Cosine3, Random, Localized };
std::string_view to_string(StartKind s);
std::optional<StartKind> parse_start_kind(std::string_view s);

struct SolverConfig {
  std::vector<StartKind> starts = {StartKind::Constant, StartKind::Cosine1,
                                   StartKind::Cosine2,  StartKind::Cosine3,
                                   StartKind::Random,   StartKind::Localized};
  std::uint64_t seed = 20240601;
  double floor = 1e-12;
  int descent_max_iter = 4000;
  double descent_tol = 1e-13; // relative decrease of I per step
  double newton_tol = 1e-10;  // sup-norm of the Euler-Lagrange residual
  int newton_max_iter = 50;
  double classify_tol = 1e-6; // (max - min) / max above this => nonconstant
  int threads = 1;

  void validate() const;
};

enum class Classification { Constant, Nonconstant };
std::string_view to_string(Classification c);

struct SolveReport {
  std::vector<double> u;
  double quotient_value = 0.0; // I(u); an upper bound for the invariant infimum
  double energy = 0.0;         // w * sum f u^{2#} h
  double el_residual = 0.0;
  Classification classification = Classification::Constant;
  std::optional<double> threshold; // A^{2/N} / (K_N (max f)^{2/2#})
  bool below_threshold = false;
  bool converged = false;
  StartKind start = StartKind::Constant;
  std::uint64_t seed = 0;
  int descent_iterations = 0;
  int newton_iterations = 0;
};

// Discrete functionals on positive grid functions.
double quotient_numerator(const ReducedProblem& pr, const std::vector<double>& u);
double weighted_power_integral(const ReducedProblem& pr,
                               const std::vector<double>& u);
double quotient(const ReducedProblem& pr, const std::vector<double>& u);
std::vector<double> quotient_gradient(const ReducedProblem& pr,
                                      const std::vector<double>& u);
/// Sup-norm of -D2 u + alpha u - f u^p.
double el_residual(const ReducedProblem& pr, const std::vector<double>& u);

/// Closed-form constant solution (alpha / c)^{1/(p-1)} for f = c.
SolveReport constant_solution(const ReducedProblem& pr);

/// Multi-start minimization of I, rescaled to a solution and Newton-polished.
/// Returns the converged report with the lowest I.
SolveReport minimize(const ReducedProblem& pr, const SolverConfig& cfg = {});

/// Single start, exposed for tests and the CLI.
SolveReport solve_from(const ReducedProblem& pr, std::vector<double> u0,
                       StartKind kind, const SolverConfig& cfg = {});
std::vector<double> initial_guess(const ReducedProblem& pr, StartKind kind,
                                  std::uint64_t seed);

struct L2BoundCheck {
  bool applicable = false;
  bool holds = false;
  double lhs = 0.0; // discrete integral of u^2
  double rhs = 0.0;
  std::string note;
};

struct ProofChainAudit {
  L2BoundCheck generic_inequality_bound; // via (crit, P, D)
  L2BoundCheck hoelder_min_f_bound;      // via min f
};

/// Evaluates the two intermediate L2 bounds of the multiplicity proofs on a
/// computed solution; integrals are the discrete ones of the problem.
ProofChainAudit proof_chain_diagnostics(const SolveReport& report,
                                        const ReducedProblem& pr,
                                        const EquationParams& params,
                                        const GenericIneqParams& gen);

struct EnergyOrdering {
  bool separated = false;
  bool first_lower = false; // E(a) < E(b)
  double margin = 0.0;      // E(b) - E(a)
  double relative_margin = 0.0;
  bool first_below_threshold = false;
  bool second_at_or_above_first_threshold = false;
};

EnergyOrdering energy_separation(const SolveReport& a, const SolveReport& b);

} // namespace critmult
