#pragma once

#include "critmult/constants.hpp"
#include "critmult/geometry.hpp"

namespace critmult {

/// Second best constant of the round sphere without symmetry: exactly n(n-2)/4.
ConstantBound b0_sphere(int n);

/// Known lower bound for the second best constant B_{0,G}:
/// max of a volume term and a quotient-curvature term.
struct GeneralLowerBound {
  double value = 0.0;
  double volume_term = 0.0;    // A^{2/N} / (V^{2/N} K_N), N = n - k
  double curvature_term = 0.0; // (N-2)/(4(N-1)) (S + 3 Lap(v_H)/A)
  // The curvature term was formed from a lower bound on S and only the sign
  // of Lap(v_H); the result is still a valid lower bound.
  bool conservative = false;
  // Evaluated with n - k <= 4, outside the range where the estimate is
  // established (the low-codimension examples consume it this way).
  bool beyond_stated_codimension = false;

  ConstantBound as_bound() const { return ConstantBound::at_least(value); }
};

struct LowerBoundOptions {
  bool allow_low_codimension = false;
};

GeneralLowerBound b0_lower_general(const EquationParams& params,
                                   const ManifoldSpec& manifold,
                                   const GroupActionSpec& action,
                                   LowerBoundOptions opts = {});

/// Two-sided estimate of B_0 on S^1(t) x S^{n-1}, no symmetry.
ConstantBound b0_bounds_circle_sphere(double t, int n);

/// Two-sided estimate of B_0 on S^n / Z_A (free cyclic action).
ConstantBound b0_bounds_quotient_sphere(int n, int A);

/// When all G-orbits are principal of constant volume, B_{0,G}(M) equals B_0
/// of the quotient; the bound transfers unchanged.
ConstantBound transfer_finite_principal(const ConstantBound& quotient_bound,
                                        const GroupActionSpec& action);

} // namespace critmult
