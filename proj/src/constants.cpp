#include "critmult/constants.hpp"

#include "critmult/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace critmult {

double sphere_volume(int N) {
  if (N < 1)
    throw DomainError("sphere_volume: dimension must be >= 1, got " +
                      std::to_string(N));
  const double half = 0.5 * (N + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double sobolev_constant(int N) {
  if (N < 3)
    throw DomainError("sobolev_constant: dimension must be >= 3, got " +
                      std::to_string(N));
  const double omega = sphere_volume(N);
  return 4.0 / (N * (N - 2.0) * std::pow(omega, 2.0 / N));
}

namespace {

double down(double x, Rounding mode) {
  if (mode == Rounding::Nearest || !std::isfinite(x))
    return x;
  return std::nextafter(x, -kInf);
}

double up(double x, Rounding mode) {
  if (mode == Rounding::Nearest || !std::isfinite(x))
    return x;
  return std::nextafter(x, kInf);
}

} // namespace

ConstantBound::ConstantBound(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi))
    throw DomainError("ConstantBound: NaN endpoint");
  if (lo == -kInf)
    throw DomainError("ConstantBound: lower endpoint must be finite");
  if (lo > hi)
    throw DomainError("ConstantBound: lo > hi");
}

ConstantBound ConstantBound::outward() const {
  return {down(lo_, Rounding::Outward), up(hi_, Rounding::Outward)};
}

ConstantBound max(const ConstantBound& a, const ConstantBound& b,
                  Rounding mode) {
  return {down(std::max(a.lo(), b.lo()), mode),
          up(std::max(a.hi(), b.hi()), mode)};
}

ConstantBound min(const ConstantBound& a, const ConstantBound& b,
                  Rounding mode) {
  return {down(std::min(a.lo(), b.lo()), mode),
          up(std::min(a.hi(), b.hi()), mode)};
}

ConstantBound scale(const ConstantBound& a, double c, Rounding mode) {
  if (c == 0.0)
    return ConstantBound::exact(0.0);
  if (c < 0.0 && !a.upper_known())
    throw DomainError("scale: negative factor on a bound without upper end");
  const double x = a.lo() * c;
  const double y = a.hi() * c;
  return {down(std::min(x, y), mode), up(std::max(x, y), mode)};
}

ConstantBound shift(const ConstantBound& a, double c, Rounding mode) {
  return {down(a.lo() + c, mode), up(a.hi() + c, mode)};
}

ConstantBound add(const ConstantBound& a, const ConstantBound& b,
                  Rounding mode) {
  return {down(a.lo() + b.lo(), mode), up(a.hi() + b.hi(), mode)};
}

EquationParams::EquationParams(int n_, int k_, double alpha_)
    : n(n_), k(k_), alpha(alpha_) {
  if (n < 3)
    throw DomainError("EquationParams: n must be >= 3");
  if (k < 0)
    throw DomainError("EquationParams: k must be >= 0");
  if (n - k <= 2)
    throw HypothesisError("EquationParams: requires n - k > 2");
  if (!(alpha > 0.0))
    throw DomainError("EquationParams: alpha must be positive");
}

double EquationParams::two_sharp() const {
  return 2.0 * (n - k) / (n - 2.0 - k);
}

} // namespace critmult
