#include "critmult/geometry.hpp"

#include "critmult/constants.hpp"
#include "critmult/errors.hpp"

#include <cmath>
#include <numbers>

namespace critmult {

namespace {

constexpr double pi = std::numbers::pi;

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string num(double x) {
  std::string s = std::to_string(x);
  while (!s.empty() && s.back() == '0')
    s.pop_back();
  if (!s.empty() && s.back() == '.')
    s.pop_back();
  return s;
}

void require_order(int A1, int A2) {
  if (A1 < 1)
    throw PreconditionError("group orders must be >= 1");
  if (!(A1 < A2))
    throw HypothesisError("orbit volumes must satisfy A1 < A2 (got A1 = " +
                          std::to_string(A1) + ", A2 = " + std::to_string(A2) +
                          ")");
}

GroupActionSpec finite_group(std::string name, int order, double scal,
                             std::string scal_expr) {
  GroupActionSpec g;
  g.name = std::move(name);
  g.k = 0;
  g.A = order;
  g.A_expression = std::to_string(order) + " (orbit cardinality)";
  g.orbits_principal_constant_volume = true;
  g.hypothesis = Hypothesis::FinitePrincipal;
  g.quotient_scal_lower = scal;
  g.quotient_scal_expression = std::move(scal_expr);
  g.vh_laplacian = OrbitVolumeLaplacian::zero();
  return g;
}

} // namespace

double model_volume(const ManifoldModel& model) {
  return std::visit(
      overloaded{
          [](const Sphere& s) {
            return sphere_volume(s.n) * std::pow(s.radius, s.n);
          },
          [](const CircleTimesSphere& m) {
            return 2.0 * pi * m.t * sphere_volume(m.n - 1);
          },
          [](const CircleSphereSphere& m) {
            return 2.0 * pi * m.a * 4.0 * pi * m.b * m.b *
                   sphere_volume(m.n - 3);
          },
          [](const QuotientSphere& m) {
            return sphere_volume(m.n) / m.order;
          },
      },
      model);
}

int model_dimension(const ManifoldModel& model) {
  return std::visit([](const auto& m) { return m.n; }, model);
}

std::string model_label(const ManifoldModel& model) {
  return std::visit(
      overloaded{
          [](const Sphere& s) {
            return "S^" + std::to_string(s.n) + "(" + num(s.radius) + ")";
          },
          [](const CircleTimesSphere& m) {
            return "S^1(" + num(m.t) + ") x S^" + std::to_string(m.n - 1);
          },
          [](const CircleSphereSphere& m) {
            return "S^1(" + num(m.a) + ") x S^2(" + num(m.b) + ") x S^" +
                   std::to_string(m.n - 3);
          },
          [](const QuotientSphere& m) {
            return "S^" + std::to_string(m.n) + "/Z_" + std::to_string(m.order);
          },
      },
      model);
}

ManifoldSpec ManifoldSpec::make(const ManifoldModel& model) {
  ManifoldSpec spec{model, model_volume(model), model_dimension(model)};
  if (spec.dim < 3)
    throw DomainError("manifold dimension must be >= 3");
  return spec;
}

std::string_view to_string(Hypothesis h) {
  switch (h) {
  case Hypothesis::H1:
    return "H1";
  case Hypothesis::H2:
    return "H2";
  case Hypothesis::FinitePrincipal:
    return "finite-principal";
  }
  return "?";
}

std::string_view to_string(OrbitVolumeLaplacian::Kind k) {
  switch (k) {
  case OrbitVolumeLaplacian::Kind::Zero:
    return "zero";
  case OrbitVolumeLaplacian::Kind::NonNegative:
    return "non-negative";
  case OrbitVolumeLaplacian::Kind::Value:
    return "value";
  }
  return "?";
}

void GroupActionSpec::validate(int manifold_dim) const {
  if (!(A > 0.0))
    throw DomainError(name + ": minimal orbit volume must be positive");
  if (k < 0 || k >= manifold_dim - 2)
    throw HypothesisError(name + ": requires 0 <= k < n - 2");
  if (orbits_principal_constant_volume && hypothesis == Hypothesis::H2)
    throw DomainError(name + ": principal constant-volume orbits are recorded "
                             "under H1 (H = G) or as finite principal");
}

std::string_view to_string(ExampleId id) {
  switch (id) {
  case ExampleId::SphereFree:
    return "sphere-free";
  case ExampleId::CircleSphereFinite:
    return "circle-sphere-finite";
  case ExampleId::CircleSphereSphere:
    return "circle-sphere-sphere";
  case ExampleId::CircleSphereConstant:
    return "circle-sphere-constant";
  case ExampleId::Hopf:
    return "hopf";
  case ExampleId::CircleSphereOrthogonal:
    return "circle-sphere-orthogonal";
  }
  return "?";
}

std::optional<ExampleId> parse_example_id(std::string_view s) {
  for (ExampleId id : kAllExamples)
    if (to_string(id) == s)
      return id;
  return std::nullopt;
}

ExampleParams default_params(ExampleId id) {
  ExampleParams p;
  switch (id) {
  case ExampleId::SphereFree:
    p.n = 5;
    p.A1 = 1;
    p.A2 = 2;
    break;
  case ExampleId::CircleSphereFinite:
    p.n = 5;
    p.t = 1.0;
    p.A1 = 1;
    p.A2 = 2;
    break;
  case ExampleId::CircleSphereSphere:
    p.n = 10;
    p.a = 4.0;
    p.b2 = 0.08;
    break;
  case ExampleId::CircleSphereConstant:
    p.n = 5;
    p.t = 40.0;
    p.A1 = 1;
    p.A2 = 2;
    break;
  case ExampleId::Hopf:
    p.n = 4;
    p.t = 8.0;
    break;
  case ExampleId::CircleSphereOrthogonal:
    p.n = 6;
    p.t = 10.0;
    break;
  }
  return p;
}

double round_sphere_scal(int N, double radius) {
  if (N < 1 || !(radius > 0.0))
    throw DomainError("round_sphere_scal: need N >= 1 and radius > 0");
  return N * (N - 1.0) / (radius * radius);
}

double oneill_scal_lower(int N_total, int k, double sectional) {
  if (k < 0 || k >= N_total)
    throw DomainError("oneill_scal_lower: requires 0 <= k < N_total");
  const double q = N_total - k;
  return sectional * q * (q - 1.0);
}

double product_scal_lower(double S_base, int r1, int r2) {
  if (r2 < 1)
    throw PreconditionError("product_scal_lower: requires r2 >= 1");
  if (r1 < r2)
    throw PreconditionError("product_scal_lower: requires r1 >= r2");
  return S_base + r1 * (r1 - 1.0);
}

ExampleConfiguration example_configuration(ExampleId id,
                                           const ExampleParams& p) {
  ExampleConfiguration cfg{id, p, {}, {}, {}};
  const int n = p.n;

  switch (id) {
  case ExampleId::SphereFree: {
    if (n < 5 || n % 2 == 0)
      throw PreconditionError("sphere-free: requires odd n >= 5");
    require_order(p.A1, p.A2);
    cfg.manifold = ManifoldSpec::make(Sphere{n, 1.0});
    // Free finite actions: the quotient is locally isometric to S^n.
    const double scal = oneill_scal_lower(n, 0, 1.0);
    const std::string expr = "n(n-1)";
    cfg.g1 = finite_group("G1 (order A1)", p.A1, scal, expr);
    cfg.g2 = finite_group("G2 (order A2)", p.A2, scal, expr);
    break;
  }
  case ExampleId::CircleSphereFinite:
  case ExampleId::CircleSphereConstant: {
    if (id == ExampleId::CircleSphereFinite && n <= 4)
      throw PreconditionError("circle-sphere-finite: requires n > 4");
    if (n < 3)
      throw PreconditionError("circle-sphere-constant: requires n >= 3");
    if (!(p.t > 0.0))
      throw PreconditionError("circle radius t must be positive");
    require_order(p.A1, p.A2);
    cfg.manifold = ManifoldSpec::make(CircleTimesSphere{p.t, n});
    // Quotient S^1(t/A) x S^{n-1}; the circle factor is flat.
    const double scal = 0.0 + round_sphere_scal(n - 1, 1.0);
    const std::string expr = "(n-1)(n-2)";
    cfg.g1 = finite_group("R1 x Id (order A1)", p.A1, scal, expr);
    cfg.g2 = finite_group("R2 x Id (order A2)", p.A2, scal, expr);
    break;
  }
  case ExampleId::CircleSphereSphere: {
    if (n < 10)
      throw PreconditionError("circle-sphere-sphere: requires n >= 10");
    if (!(p.a > 0.0) || !(p.b2 > 0.0))
      throw PreconditionError("circle-sphere-sphere: requires a > 0, b^2 > 0");
    if (!(p.b2 > 1.0 / (4.0 * p.a)))
      throw HypothesisError(
          "circle-sphere-sphere: A1 < A2 requires b^2 > 1/(4a)");
    const double b = std::sqrt(p.b2);
    cfg.manifold = ManifoldSpec::make(CircleSphereSphere{p.a, b, n});

    GroupActionSpec g1;
    g1.name = "Id x O(n-6) x O(4)";
    g1.k = 3;
    g1.A = sphere_volume(3);
    g1.A_expression = "2*pi^2";
    g1.orbits_principal_constant_volume = false;
    g1.hypothesis = Hypothesis::H2;
    // S^1(a) x S^2(b) base: the circle is flat, S^2(b) has S = 2/b^2.
    g1.quotient_scal_lower =
        product_scal_lower(0.0 + round_sphere_scal(2, b), n - 6, 4);
    g1.quotient_scal_expression = "2/b^2 + (n-6)(n-7)";
    g1.vh_laplacian = OrbitVolumeLaplacian::non_negative();

    GroupActionSpec g2;
    g2.name = "O(2) x O(3) x Id";
    g2.k = 3;
    g2.A = 8.0 * pi * pi * p.a * p.b2;
    g2.A_expression = "8*pi^2*a*b^2";
    g2.orbits_principal_constant_volume = true;
    g2.hypothesis = Hypothesis::H1;
    g2.quotient_scal_lower = round_sphere_scal(n - 3, 1.0);
    g2.quotient_scal_expression = "(n-3)(n-4)";
    g2.vh_laplacian = OrbitVolumeLaplacian::zero();

    cfg.g1 = g1;
    cfg.g2 = g2;
    break;
  }
  case ExampleId::Hopf: {
    if (n != 4)
      throw PreconditionError("hopf: the manifold is S^1(t) x S^3, n = 4");
    if (!(p.t > 1.0))
      throw HypothesisError("hopf: A1 < A2 requires t > 1");
    cfg.manifold = ManifoldSpec::make(CircleTimesSphere{p.t, 4});

    GroupActionSpec g1;
    g1.name = "Id x {(s,s)} (Hopf)";
    g1.k = 1;
    g1.A = 2.0 * pi;
    g1.A_expression = "2*pi";
    g1.orbits_principal_constant_volume = true;
    g1.hypothesis = Hypothesis::H1;
    // Quotient S^1(t) x S^2(1/2).
    g1.quotient_scal_lower = 0.0 + round_sphere_scal(2, 0.5);
    g1.quotient_scal_expression = "8";
    g1.vh_laplacian = OrbitVolumeLaplacian::zero();

    GroupActionSpec g2;
    g2.name = "O(2) x Id";
    g2.k = 1;
    g2.A = 2.0 * pi * p.t;
    g2.A_expression = "2*pi*t";
    g2.orbits_principal_constant_volume = true;
    g2.hypothesis = Hypothesis::H1;
    g2.quotient_scal_lower = round_sphere_scal(3, 1.0);
    g2.quotient_scal_expression = "6";
    g2.vh_laplacian = OrbitVolumeLaplacian::zero();

    cfg.g1 = g1;
    cfg.g2 = g2;
    break;
  }
  case ExampleId::CircleSphereOrthogonal: {
    if (n < 4)
      throw PreconditionError("circle-sphere-orthogonal: requires n >= 4");
    if (!(p.t > 1.0))
      throw HypothesisError("circle-sphere-orthogonal: A1 < A2 requires t > 1");
    cfg.manifold = ManifoldSpec::make(CircleTimesSphere{p.t, n});

    GroupActionSpec g1;
    g1.name = "Id x O(n-2) x O(2)";
    g1.k = 1;
    g1.A = 2.0 * pi;
    g1.A_expression = "2*pi";
    g1.orbits_principal_constant_volume = false;
    g1.hypothesis = Hypothesis::H2;
    g1.quotient_scal_lower = product_scal_lower(0.0, n - 2, 2);
    g1.quotient_scal_expression = "(n-2)(n-3)";
    g1.vh_laplacian = OrbitVolumeLaplacian::non_negative();

    GroupActionSpec g2;
    g2.name = "O(2) x Id";
    g2.k = 1;
    g2.A = 2.0 * pi * p.t;
    g2.A_expression = "2*pi*t";
    g2.orbits_principal_constant_volume = true;
    g2.hypothesis = Hypothesis::H1;
    g2.quotient_scal_lower = round_sphere_scal(n - 1, 1.0);
    g2.quotient_scal_expression = "(n-1)(n-2)";
    g2.vh_laplacian = OrbitVolumeLaplacian::zero();

    cfg.g1 = g1;
    cfg.g2 = g2;
    break;
  }
  }

  cfg.g1.validate(cfg.manifold.dim);
  cfg.g2.validate(cfg.manifold.dim);
  return cfg;
}

} // namespace critmult
