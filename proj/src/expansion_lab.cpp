#include "critmult/expansion_lab.hpp"

#include "critmult/constants.hpp"
#include "critmult/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <string>

namespace critmult {

namespace {

// Geometric breakpoints sqrt(eps) * 4^j so every panel sees the bubble at a
// comparable scale.
std::vector<double> panels(double epsilon, double delta) {
  std::vector<double> b{0.0};
  for (double x = std::sqrt(epsilon); x < delta; x *= 4.0)
    b.push_back(x);
  b.push_back(delta);
  return b;
}

std::string num(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

// Kronrod on one panel, mapped onto [-1, 1] here: the library's own
// recursion compares an unscaled error with a scaled tolerance, which
// misreports short panels.
template <class F>
double panel(F& f, double a, double b, unsigned depth, double tol, double* err) {
  using boost::math::quadrature::gauss_kronrod;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto g = [&](double x) { return half * f(mid + half * x); };
  double e = 0.0;
  const double v = gauss_kronrod<double, 61>::integrate(g, -1.0, 1.0, depth, tol, &e);
  if (err)
    *err = e;
  return v;
}

// Panels far from the bubble suffer cancellation in u but contribute little,
// so each panel's tolerance is relative to the whole integral, estimated by a
// first non-adaptive pass.
template <class F>
double integrate(F&& f, const std::vector<double>& b, double rel_tol) {
  std::vector<double> rough(b.size() - 1);
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    rough[i] = panel(f, b[i], b[i + 1], 0, rel_tol, nullptr);
    scale += std::abs(rough[i]);
  }
  double total = 0.0, err_total = 0.0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double share = std::abs(rough[i]) / scale;
    const double tol = share > 0.0 ? std::min(rel_tol / share, 1e-3) : 1e-3;
    double err = 0.0;
    total += panel(f, b[i], b[i + 1], 20, tol, &err);
    err_total += err;
  }
  if (!std::isfinite(total) || err_total > 10.0 * rel_tol * std::abs(total))
    throw QuadratureError("quadrature did not reach rel. tol " + num(rel_tol) +
                          " (error estimate " + num(err_total / std::abs(total)) + ")");
  return total;
}

} // namespace

std::string_view to_string(DensityModel m) {
  return m == DensityModel::Euclidean ? "euclidean" : "round-sphere";
}

void ExpansionConfig::validate() const {
  if (N < 5)
    throw PreconditionError("expansion lab needs N >= 5");
  if (!(delta > 0.0) || !(alpha >= 0.0) || !(A > 0.0) || !(f0 > 0.0))
    throw PreconditionError("delta, A, f0 must be positive and alpha >= 0");
  if (model == DensityModel::RoundSphere &&
      !(curvature > 0.0 && std::sqrt(curvature) * delta < 3.141592653589793))
    throw PreconditionError("round-sphere model needs 0 < sqrt(curvature) delta < pi");
  if (q * delta * delta / (2.0 * N) >= 1.0)
    throw PreconditionError("fiber volume must stay positive on [0, delta]");
  if (lap_f * delta * delta / (2.0 * N) >= f0)
    throw PreconditionError("f must stay positive on [0, delta]");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0))
      throw PreconditionError("epsilons must be positive");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw PreconditionError("epsilons must be strictly decreasing");
  }
  if (!epsilons.empty() && epsilons.front() > 1e-2 * delta * delta)
    throw PreconditionError("largest epsilon must be well below delta^2");
}

double ExpansionConfig::scalar_curvature() const {
  return model == DensityModel::Euclidean ? 0.0 : N * (N - 1.0) * curvature;
}

std::vector<double> default_epsilons(double delta, int count) {
  std::vector<double> e;
  const double d2 = delta * delta;
  for (int i = 0; i < count; ++i)
    e.push_back(d2 * std::pow(10.0, -3.0 - 3.0 * i / (count - 1)));
  return e;
}

double test_function(double epsilon, double delta, int N, double r) {
  if (!(epsilon > 0.0) || !(delta > 0.0))
    throw DomainError("epsilon and delta must be positive");
  if (r < 0.0 || r > delta)
    throw DomainError("r outside [0, delta]");
  const double e = 1.0 - N / 2.0;
  return std::pow(epsilon + r * r, e) - std::pow(epsilon + delta * delta, e);
}

double rayleigh_quotient(const ExpansionConfig& cfg, double epsilon,
                         double rel_tol) {
  cfg.validate();
  const int N = cfg.N;
  const double omega = sphere_volume(N - 1);
  const double sk = std::sqrt(cfg.curvature);
  auto rho = [&](double r) {
    const double fiber = cfg.A * (1.0 - cfg.q * r * r / (2.0 * N));
    const double radius =
        cfg.model == DensityModel::Euclidean ? r : std::sin(sk * r) / sk;
    return fiber * omega * std::pow(radius, N - 1);
  };
  const double cut = std::pow(epsilon + cfg.delta * cfg.delta, 1.0 - N / 2.0);
  auto u = [&](double r) { return std::pow(epsilon + r * r, 1.0 - N / 2.0) - cut; };
  auto du = [&](double r) { return (2.0 - N) * r * std::pow(epsilon + r * r, -N / 2.0); };
  auto f = [&](double r) { return cfg.f0 - cfg.lap_f * r * r / (2.0 * N); };
  const double q = cfg.two_sharp();

  const auto b = panels(epsilon, cfg.delta);
  const double num = integrate(
      [&](double r) {
        const double v = u(r), d = du(r);
        return (d * d + cfg.alpha * v * v) * rho(r);
      },
      b, rel_tol);
  const double den = integrate(
      [&](double r) { return f(r) * std::pow(u(r), q) * rho(r); }, b, rel_tol);
  return num / std::pow(den, 2.0 / q);
}

double expansion_limit(const ExpansionConfig& cfg) {
  return std::pow(cfg.A, 2.0 / cfg.N) /
         (sobolev_constant(cfg.N) * std::pow(cfg.f0, 2.0 / cfg.two_sharp()));
}

double predicted_c1(const ExpansionConfig& cfg) {
  const double N = cfg.N;
  return (4.0 * (N - 1.0) * cfg.alpha / (N - 2.0) +
          (N - 4.0) * cfg.lap_f / (2.0 * cfg.f0) - 3.0 * cfg.q -
          cfg.scalar_curvature()) /
         (N * (N - 4.0));
}

ExpansionFit fit_and_compare(const ExpansionConfig& cfg) {
  cfg.validate();
  if (cfg.epsilons.size() < 4)
    throw PreconditionError("fit needs at least 4 epsilons");
  ExpansionFit out;
  out.epsilons = cfg.epsilons;
  for (double e : cfg.epsilons)
    out.values.push_back(rayleigh_quotient(cfg, e));

  // Least squares I = L0 + L1 eps + L2 eps^2, eps rescaled to [0, 1].
  const double s = cfg.epsilons.front();
  const auto m = static_cast<Eigen::Index>(cfg.epsilons.size());
  Eigen::MatrixXd X(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double x = cfg.epsilons[i] / s;
    X(i, 0) = 1.0;
    X(i, 1) = x;
    X(i, 2) = x * x;
    y[i] = out.values[i];
  }
  const Eigen::Vector3d c = X.colPivHouseholderQr().solve(y);
  out.limit_fitted = c[0];
  out.c1_fitted = c[1] / s / c[0];
  out.c1_predicted = predicted_c1(cfg);
  out.limit_exact = expansion_limit(cfg);
  out.eps_max = cfg.epsilons.front();
  out.eps_min = cfg.epsilons.back();
  return out;
}

} // namespace critmult
