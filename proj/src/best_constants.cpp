#include "critmult/best_constants.hpp"

#include "critmult/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace critmult {

ConstantBound b0_sphere(int n) {
  if (n < 3)
    throw DomainError("b0_sphere: requires n >= 3");
  return ConstantBound::exact(n * (n - 2.0) / 4.0);
}

GeneralLowerBound b0_lower_general(const EquationParams& params,
                                   const ManifoldSpec& manifold,
                                   const GroupActionSpec& action,
                                   LowerBoundOptions opts) {
  const int N = params.codim();
  if (action.k != params.k)
    throw HypothesisError("b0_lower_general: orbit dimension of " +
                          action.name + " differs from k");
  if (N <= 4 && !opts.allow_low_codimension)
    throw HypothesisError("b0_lower_general: the lower bound for B_{0,G} "
                          "requires n - k > 4 (got n - k = " +
                          std::to_string(N) + ")");

  GeneralLowerBound out;
  out.volume_term = std::pow(action.A / manifold.volume, 2.0 / N) /
                    sobolev_constant(N);
  out.curvature_term =
      (N - 2.0) / (4.0 * (N - 1.0)) *
      (action.quotient_scal_lower + 3.0 * action.vh_laplacian.lower_value() /
                                        action.A);
  out.value = std::max(out.volume_term, out.curvature_term);
  out.conservative = !action.vh_laplacian.exact();
  out.beyond_stated_codimension = N <= 4;
  return out;
}

ConstantBound b0_bounds_circle_sphere(double t, int n) {
  if (!(t > 0.0))
    throw DomainError("b0_bounds_circle_sphere: requires t > 0");
  if (n < 3)
    throw DomainError("b0_bounds_circle_sphere: requires n >= 3");
  const double base = (n - 2.0) * (n - 2.0) / 4.0;
  return {base, base + 1.0 / (4.0 * t * t)};
}

ConstantBound b0_bounds_quotient_sphere(int n, int A) {
  if (n < 3)
    throw DomainError("b0_bounds_quotient_sphere: requires n >= 3");
  if (A < 1)
    throw DomainError("b0_bounds_quotient_sphere: requires A >= 1");
  const double sphere = n * (n - 2.0) / 4.0;
  const double lo = std::pow(static_cast<double>(A), 2.0 / n) * sphere;
  const double hi =
      (1.0 + A * static_cast<double>(A) / 4.0) * ((n + 1.0) / 2.0) - 1.0 +
      sphere;
  return {lo, hi};
}

ConstantBound transfer_finite_principal(const ConstantBound& quotient_bound,
                                        const GroupActionSpec& action) {
  if (!action.orbits_principal_constant_volume)
    throw HypothesisError("transfer_finite_principal: orbits of " +
                          action.name +
                          " are not all principal of constant volume");
  return quotient_bound;
}

} // namespace critmult
