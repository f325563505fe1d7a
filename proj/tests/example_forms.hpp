#pragma once

// Closed forms of the six example intervals, written out by hand.

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

struct Interval {
  double lo, hi;
  bool hi_strict;
};

inline Interval sphere_free(int n) {
  return {n * n * (n - 4.0) / (4.0 * (n - 2.0)), n * (n - 2.0) / 4.0, false};
}

inline Interval circle_sphere_finite(int n, double t) {
  const double m = n - 2.0;
  return {n * (n - 4.0) / (m * m) * (m * m / 4 + 1 / (4 * t * t)), m * m / 4, false};
}

inline Interval circle_sphere_sphere(int n, double b2) {
  return {(n - 3.0) * (n - 3.0) * (n - 7.0) / (4.0 * (n - 5.0)),
          std::min((n - 3.0) * (n - 5.0) / 4.0,
                   (n - 5.0) / (4.0 * (n - 4.0)) * (2.0 / b2 + (n - 6.0) * (n - 7.0))),
          true};
}

// Two finite rotation groups of orders A1 < A2 on S^1(t) x S^{n-1}, f = 1.
inline Interval circle_sphere_constant(int n, double t, double A1, double A2) {
  const double V = 2 * pi * t * sphere_volume(n - 1);
  const double K = sobolev(n);
  const double m = n - 2.0;
  const double gap = (std::pow(A2, 2.0 / n) - std::pow(A1, 2.0 / n)) /
                     (K * std::pow(V, 2.0 / n));
  const double level = std::pow(A2, 2.0 / n) / (K * std::pow(V, 2.0 / n));
  return {std::max(A2 * A2 / (4 * t * t) + m * m / 4 - gap, level), m * m / 4, false};
}

inline Interval hopf(double t) { return {0.75 / std::cbrt(t * t), 0.75, true}; }

inline Interval circle_sphere_orthogonal(int n, double t) {
  return {(n - 1.0) * (n - 3.0) / (4.0 * std::pow(t, 2.0 / (n - 1))),
          (n - 3.0) * (n - 3.0) / 4.0, true};
}

inline double orthogonal_t_threshold(int n) {
  return std::pow((n - 1.0) / (n - 3.0), (n - 1.0) / 2.0);
}

} // namespace oracle
