#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace critmult {

// Model manifolds. Radii are those of the round factors.
struct Sphere {
  int n;
  double radius = 1.0;
};
struct CircleTimesSphere { // S^1(t) x S^{n-1}
  double t;
  int n;
};
struct CircleSphereSphere { // S^1(a) x S^2(b) x S^{n-3}
  double a;
  double b;
  int n;
};
struct QuotientSphere { // S^n / Z_order, free action
  int n;
  int order;
};

using ManifoldModel =
    std::variant<Sphere, CircleTimesSphere, CircleSphereSphere, QuotientSphere>;

struct ManifoldSpec {
  ManifoldModel model;
  double volume = 0.0;
  int dim = 0;

  static ManifoldSpec make(const ManifoldModel& model);
};

/// Closed-form Riemannian volume of a model manifold.
double model_volume(const ManifoldModel& model);
int model_dimension(const ManifoldModel& model);
std::string model_label(const ManifoldModel& model);

enum class Hypothesis { H1, H2, FinitePrincipal };
std::string_view to_string(Hypothesis h);

/// Sign (or value) of the Laplacian of the orbit-volume function at the
/// reference point of the quotient. Only the sign is known in the examples.
struct OrbitVolumeLaplacian {
  enum class Kind { Zero, NonNegative, Value };
  Kind kind = Kind::Zero;
  double value = 0.0;

  static OrbitVolumeLaplacian zero() { return {Kind::Zero, 0.0}; }
  static OrbitVolumeLaplacian non_negative() { return {Kind::NonNegative, 0.0}; }
  static OrbitVolumeLaplacian exactly(double v) { return {Kind::Value, v}; }

  /// Contribution usable in a lower bound: 0 unless the value is known.
  double lower_value() const { return kind == Kind::Value ? value : 0.0; }
  bool exact() const { return kind != Kind::NonNegative; }
};
std::string_view to_string(OrbitVolumeLaplacian::Kind k);

/// Orbit data for one isometry group. Hypotheses are recorded facts, not
/// verified here.
struct GroupActionSpec {
  std::string name;
  int k = 0;                 // minimal orbit dimension
  double A = 1.0;            // minimal volume among k-dimensional orbits
  std::string A_expression;  // closed form of A in the model parameters
  bool orbits_principal_constant_volume = false;
  Hypothesis hypothesis = Hypothesis::FinitePrincipal;
  double quotient_scal_lower = 0.0; // lower bound for S of the quotient at x0
  std::string quotient_scal_expression;
  OrbitVolumeLaplacian vh_laplacian;

  void validate(int manifold_dim) const;
};

enum class ExampleId {
  SphereFree,             // S^n, two free finite groups, critical
  CircleSphereFinite,     // S^1(t) x S^{n-1}, finite rotation groups, critical
  CircleSphereSphere,     // S^1(a) x S^2(b) x S^{n-3}, k = 3
  CircleSphereConstant,   // S^1(t) x S^{n-1}, f = 1, triple multiplicity
  Hopf,                   // S^1(t) x S^3 with the Hopf action, k = 1
  CircleSphereOrthogonal, // S^1(t) x S^{n-1}, O(n-2) x O(2), k = 1
};

inline constexpr ExampleId kAllExamples[] = {
    ExampleId::SphereFree,           ExampleId::CircleSphereFinite,
    ExampleId::CircleSphereSphere,   ExampleId::CircleSphereConstant,
    ExampleId::Hopf,                 ExampleId::CircleSphereOrthogonal};

std::string_view to_string(ExampleId id);
std::optional<ExampleId> parse_example_id(std::string_view s);

/// Model parameters shared by all example configurations; each example reads
/// the subset it needs. A1/A2 are group orders where the groups are finite.
struct ExampleParams {
  int n = 5;
  double t = 1.0;
  double a = 1.0;
  double b2 = 1.0; // b^2
  int A1 = 1;
  int A2 = 2;
};

/// Parameter point used by `table` when no overrides are given.
ExampleParams default_params(ExampleId id);

struct ExampleConfiguration {
  ExampleId id;
  ExampleParams params;
  ManifoldSpec manifold;
  GroupActionSpec g1;
  GroupActionSpec g2;
};

ExampleConfiguration example_configuration(ExampleId id,
                                           const ExampleParams& params);

/// Scalar curvature of a round N-sphere of the given radius.
double round_sphere_scal(int N, double radius);

/// Lower bound sectional * (N - k)(N - k - 1) for the scalar curvature of the
/// quotient of a constant-curvature manifold by a group with principal orbits.
double oneill_scal_lower(int N_total, int k, double sectional);

/// Lower bound S_base + r1 (r1 - 1) for the quotient of V x S^{r1+r2-1} by
/// Id x Id x O(r2) at a point of the minimal orbit.
double product_scal_lower(double S_base, int r1, int r2);

} // namespace critmult
