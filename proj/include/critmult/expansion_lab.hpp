#pragma once

#include <string_view>
#include <vector>

namespace critmult {

enum class DensityModel { Euclidean, RoundSphere };
std::string_view to_string(DensityModel m);

/// Radial model of a quotient near the point of maximal f: fiber volume
/// v(r) = A (1 - q r^2 / (2N)) times the geodesic-sphere area of the model.
struct ExpansionConfig {
  int N = 6;
  double delta = 1.0;
  double alpha = 1.0;
  double A = 1.0;
  DensityModel model = DensityModel::Euclidean;
  double curvature = 1.0; // RoundSphere only
  double q = 0.0;         // Delta v(0) = q A
  double f0 = 1.0;        // f at the centre
  double lap_f = 0.0;     // Delta f at the centre; f(r) = f0 - lap_f r^2 / (2N)
  std::vector<double> epsilons;

  void validate() const;
  double scalar_curvature() const;
  double two_sharp() const { return 2.0 * N / (N - 2.0); }
};

/// Log-spaced epsilons over [1e-6, 1e-3] delta^2, decreasing.
std::vector<double> default_epsilons(double delta, int count = 8);

/// (eps + r^2)^{1-N/2} - (eps + delta^2)^{1-N/2}.
double test_function(double epsilon, double delta, int N, double r);

/// Quotient of the cut-off bubble on the model density (adaptive quadrature,
/// rel. tol 1e-12 unless overridden).
double rayleigh_quotient(const ExpansionConfig& cfg, double epsilon,
                         double rel_tol = 1e-12);

/// A^{2/N} / (K_N f0^{2/2#}).
double expansion_limit(const ExpansionConfig& cfg);

/// First-order coefficient of I(u_eps) / limit in eps, N > 4.
double predicted_c1(const ExpansionConfig& cfg);

struct ExpansionFit {
  double c1_fitted = 0.0;
  double c1_predicted = 0.0;
  double limit_fitted = 0.0;
  double limit_exact = 0.0;
  double eps_min = 0.0;
  double eps_max = 0.0;
  std::vector<double> epsilons;
  std::vector<double> values; // I(u_eps)
};

ExpansionFit fit_and_compare(const ExpansionConfig& cfg);

} // namespace critmult
