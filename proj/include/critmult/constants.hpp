#pragma once

#include <limits>

namespace critmult {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Riemannian volume of the unit N-sphere, 2 pi^{(N+1)/2} / Gamma((N+1)/2).
double sphere_volume(int N);

/// Sharp Euclidean Sobolev constant K_N = 4 / (N (N-2) omega_N^{2/N}), N >= 3.
double sobolev_constant(int N);

enum class Rounding { Nearest, Outward };

/// Closed interval [lo, hi] enclosing a constant that is only known through
/// two-sided estimates. hi may be +inf; lo may not be -inf.
class ConstantBound {
public:
  ConstantBound(double lo, double hi);

  static ConstantBound exact(double value) { return {value, value}; }
  static ConstantBound at_least(double lo) { return {lo, kInf}; }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  bool is_exact() const { return lo_ == hi_; }
  bool upper_known() const { return hi_ < kInf; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  /// Enlarges the bound by one ulp on each finite side.
  ConstantBound outward() const;

  friend bool operator==(const ConstantBound&, const ConstantBound&) = default;

private:
  double lo_;
  double hi_;
};

// Containment-preserving operations: if x in a and y in b then op(x, y) lies in
// the result. Outward rounding widens each finite endpoint by one ulp.
ConstantBound max(const ConstantBound& a, const ConstantBound& b,
                  Rounding mode = Rounding::Nearest);
ConstantBound min(const ConstantBound& a, const ConstantBound& b,
                  Rounding mode = Rounding::Nearest);
ConstantBound scale(const ConstantBound& a, double c,
                    Rounding mode = Rounding::Nearest);
ConstantBound shift(const ConstantBound& a, double c,
                    Rounding mode = Rounding::Nearest);
ConstantBound add(const ConstantBound& a, const ConstantBound& b,
                  Rounding mode = Rounding::Nearest);

/// One instance of  Delta u + alpha u = f u^p  with G-orbits of minimal
/// dimension k on an n-manifold. The nonlinearity sits at the invariant
/// critical exponent 2# = 2(n-k)/(n-2-k), p = 2# - 1.
struct EquationParams {
  int n = 3;
  int k = 0;
  double alpha = 1.0;

  EquationParams() = default;
  EquationParams(int n, int k, double alpha = 1.0);

  int codim() const { return n - k; }
  double two_sharp() const;
  double p() const { return two_sharp() - 1.0; }
  bool critical() const { return k == 0; }
};

} // namespace critmult
