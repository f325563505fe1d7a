#include "critmult/conditions.hpp"

#include "critmult/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numbers>

namespace critmult {

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double x) {
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

// Strict comparison for hypotheses that may hold with analytic equality: a
// floating-point win by a few ulps is not counted.
bool definitely_less(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return a < b - 8.0 * std::numeric_limits<double>::epsilon() * scale;
}

void require_orbit_order(double A1, double A2, double V) {
  if (!(A1 > 0.0) || !(A2 > 0.0))
    throw DomainError("orbit volumes must be positive");
  if (!(A1 < A2))
    throw HypothesisError("multiplicity requires A1 < A2 (got A1 = " +
                          num(A1) + ", A2 = " + num(A2) + ")");
  if (!(V > 0.0))
    throw DomainError("manifold volume must be positive");
}

// Condition i): alpha <= B0G2 (lower end of the bound).
void condition_upper(GuaranteedInterval& out, const std::string& label,
                     const ConstantBound& B0G2) {
  out.require_at_most(label, B0G2.lo(), false);
}

// alpha > B0G2 - gap, consuming the upper end of B0G2.
void condition_gap(GuaranteedInterval& out, const std::string& label,
                   const ConstantBound& B0G2, double gap, bool strict) {
  if (!B0G2.upper_known()) {
    out.mark_unknown(label, "needs an upper bound for B0,G2");
    return;
  }
  out.require_at_least(label, B0G2.hi() - gap, strict);
}

} // namespace

FProfile FProfile::constant(double c) {
  FProfile f;
  f.f_max = f.f_min = f.f_avg = f.f_at_peak = c;
  f.laplacian_at_peak = 0.0;
  f.vanishing_order = 1000; // every derivative vanishes
  return f;
}

void FProfile::validate() const {
  if (!(f_min > 0.0))
    throw PreconditionError("f must be positive (f_min > 0)");
  if (!(f_min <= f_avg && f_avg <= f_max))
    throw PreconditionError("f statistics must satisfy f_min <= f_avg <= f_max");
  if (f_at_peak != f_max)
    throw PreconditionError("the peak value of f must equal max f");
  if (vanishing_order < 2)
    throw PreconditionError("f must have a critical point at the peak "
                            "(vanishing order >= 2)");
}

void GenericIneqParams::validate() const {
  if (!(crit > 2.0 && crit < 4.0))
    throw HypothesisError("generic inequality requires crit in (2, 4), got " +
                          num(crit));
  if (!(P > 0.0))
    throw DomainError("generic inequality requires P > 0");
  if (!(D >= 0.0))
    throw DomainError("generic inequality requires D >= 0");
}

GenericIneqParams sobolev_specialization(const EquationParams& params,
                                         double D) {
  const int n = params.n;
  return {2.0 * n / (n - 2.0), sobolev_constant(n), D};
}

GenericIneqParams invariant_specialization(const EquationParams& params,
                                           double A2, double D) {
  const int N = params.codim();
  return {params.two_sharp(), sobolev_constant(N) * std::pow(A2, -2.0 / N), D};
}

std::string_view to_string(ConditionStatus s) {
  switch (s) {
  case ConditionStatus::Satisfied:
    return "satisfied";
  case ConditionStatus::Unsatisfiable:
    return "unsatisfiable";
  case ConditionStatus::NeedsUnknownConstant:
    return "needs-unknown-constant";
  case ConditionStatus::Info:
    return "info";
  }
  return "info";
}

void GuaranteedInterval::raise_lower(double value, bool strict) {
  if (value > lo) {
    lo = value;
    lo_strict = strict;
  } else if (value == lo) {
    lo_strict = lo_strict || strict;
  }
}

void GuaranteedInterval::lower_upper(double value, bool strict) {
  if (value < hi) {
    hi = value;
    hi_strict = strict;
  } else if (value == hi) {
    hi_strict = hi_strict || strict;
  }
}

void GuaranteedInterval::require_at_least(std::string label, double value,
                                          bool strict) {
  raise_lower(value, strict);
  note(std::move(label), ConditionStatus::Satisfied,
       std::string(strict ? "alpha > " : "alpha >= ") + num(value), value);
}

void GuaranteedInterval::require_at_most(std::string label, double value,
                                         bool strict) {
  lower_upper(value, strict);
  note(std::move(label), ConditionStatus::Satisfied,
       std::string(strict ? "alpha < " : "alpha <= ") + num(value), value);
}

void GuaranteedInterval::mark_unknown(std::string label, std::string detail) {
  empty = true;
  unknown = true;
  note(std::move(label), ConditionStatus::NeedsUnknownConstant,
       std::move(detail));
}

void GuaranteedInterval::mark_empty(std::string label, std::string detail) {
  empty = true;
  note(std::move(label), ConditionStatus::Unsatisfiable, std::move(detail));
}

void GuaranteedInterval::note(std::string label, ConditionStatus status,
                              std::string detail, double threshold) {
  diagnostics.push_back(
      {std::move(label), status, std::move(detail), threshold});
}

void GuaranteedInterval::settle() {
  if (lo > hi || (lo == hi && (lo_strict || hi_strict)))
    empty = true;
  if (!empty)
    return;
  for (auto& d : diagnostics)
    if (d.status == ConditionStatus::Satisfied)
      d.status = ConditionStatus::Unsatisfiable;
}

bool GuaranteedInterval::contains(double alpha) const {
  if (empty)
    return false;
  const bool above = lo_strict ? alpha > lo : alpha >= lo;
  const bool below = hi_strict ? alpha < hi : alpha <= hi;
  return above && below;
}

double faget_threshold(const EquationParams& params, double A,
                       const FProfile& f) {
  if (!(A > 0.0))
    throw DomainError("faget_threshold: A must be positive");
  const int N = params.codim();
  return std::pow(A, 2.0 / N) /
         (sobolev_constant(N) * std::pow(f.f_max, 2.0 / params.two_sharp()));
}

ExistenceBound existence_alpha_bound(const EquationParams& params,
                                     const GroupActionSpec& action,
                                     const FProfile& f) {
  const int N = params.codim();
  if (N < 4)
    throw HypothesisError("test-function existence requires n - k >= 4 (got " +
                          std::to_string(N) + ")");
  if (action.k != params.k)
    throw HypothesisError("orbit dimension of " + action.name +
                          " differs from k");
  ExistenceBound out;
  out.flatness_ok = (N - 4.0) * f.laplacian_at_peak == 0.0;
  out.alpha_sup = (N - 2.0) / (4.0 * (N - 1.0)) *
                  (3.0 * action.vh_laplacian.lower_value() / action.A +
                   action.quotient_scal_lower);
  return out;
}

GuaranteedInterval generic_multiplicity_interval(
    const EquationParams& params, const GenericIneqParams& gen, double A1,
    double A2, double V, const ConstantBound& B0G2, const FProfile& f,
    bool relaxed_third) {
  gen.validate();
  require_orbit_order(A1, A2, V);
  f.validate();
  const int N = params.codim();
  const double crit = gen.crit;
  const double c = gen.factor();

  GuaranteedInterval out;
  condition_upper(out, "i", B0G2);

  if (std::isinf(gen.D))
    out.mark_unknown("ii", "needs a finite zero-order constant D");
  else
    out.require_at_least("ii", c * gen.D, false);

  const double e = (crit - 2.0) * (N - 2.0) / (2.0 * N);
  const double gap = (std::pow(A2 / A1, 2.0 / N) - 1.0) *
                     std::pow(A2, (2.0 - crit) / N) *
                     std::pow(sobolev_constant(N), (crit - 2.0) / 2.0) *
                     std::pow(V, -e) * std::pow(gen.P, -crit / 2.0) *
                     std::pow(c, crit / 2.0) * std::pow(f.f_max / f.f_avg, e);
  condition_gap(out, "iii", B0G2, gap, !relaxed_third);
  out.settle();
  return out;
}

GuaranteedInterval sobolev_multiplicity_interval(
    const EquationParams& params, double A1, double A2, double V,
    const ConstantBound& B0, const ConstantBound& B0G2, const FProfile& f,
    bool relaxed_third) {
  const int n = params.n;
  if (n <= 4)
    throw HypothesisError("the full-Sobolev multiplicity criterion requires "
                          "n > 4 (got n = " + std::to_string(n) + ")");
  require_orbit_order(A1, A2, V);
  f.validate();
  const int N = params.codim();
  const double nn = n, NN = N;
  const double ratio = nn * (nn - 4.0) / ((nn - 2.0) * (nn - 2.0));

  GuaranteedInterval out;
  condition_upper(out, "i", B0G2);
  if (!B0.upper_known())
    out.mark_unknown("ii", "needs an upper bound for B0(M)");
  else
    out.require_at_least("ii", ratio * B0.hi(), false);

  const double gap =
      (std::pow(A2 / A1, 2.0 / NN) - 1.0) *
      std::pow(A2, -4.0 / (NN * (nn - 2.0))) *
      std::pow(sobolev_constant(N), 2.0 / (nn - 2.0)) /
      (std::pow(V, 2.0 * (NN - 2.0) / (NN * (nn - 2.0))) *
       std::pow(sobolev_constant(n), nn / (nn - 2.0))) *
      std::pow(ratio, nn / (nn - 2.0)) *
      std::pow(f.f_max / f.f_avg, 2.0 * (NN - 2.0) / (NN * (nn - 2.0)));
  condition_gap(out, "iii", B0G2, gap, !relaxed_third);
  out.settle();
  return out;
}

GuaranteedInterval invariant_multiplicity_interval(
    const EquationParams& params, double A1, double A2, double V,
    const ConstantBound& B0G2, const FProfile& f, bool relaxed_third) {
  const int N = params.codim();
  if (N <= 4)
    throw HypothesisError("the invariant multiplicity criterion requires "
                          "n - k > 4 (got n - k = " + std::to_string(N) + ")");
  require_orbit_order(A1, A2, V);
  f.validate();
  const double NN = N;
  const double ratio = NN * (NN - 4.0) / ((NN - 2.0) * (NN - 2.0));

  GuaranteedInterval out;
  condition_upper(out, "i", B0G2);
  if (!B0G2.upper_known())
    out.mark_unknown("ii", "needs an upper bound for B0,G2");
  else
    out.require_at_least("ii", ratio * B0G2.hi(), false);

  const double gap = (std::pow(A2 / A1, 2.0 / NN) - 1.0) *
                     std::pow(A2, 2.0 / NN) /
                     (std::pow(V, 2.0 / NN) * sobolev_constant(N)) *
                     std::pow(ratio, NN / (NN - 2.0)) *
                     std::pow(f.f_max / f.f_avg, 2.0 / NN);
  condition_gap(out, "iii", B0G2, gap, !relaxed_third);
  out.settle();
  return out;
}

double orbit_volume_gap(const EquationParams& params, double A1, double A2,
                        double V) {
  const int N = params.codim();
  return (std::pow(A2 / V, 2.0 / N) - std::pow(A1 / V, 2.0 / N)) /
         sobolev_constant(N);
}

double orbit_volume_level(const EquationParams& params, double A, double V) {
  const int N = params.codim();
  return std::pow(A / V, 2.0 / N) / sobolev_constant(N);
}

GuaranteedInterval volume_gap_interval(const EquationParams& params,
                                       double A1, double A2, double V,
                                       const ConstantBound& B0G2,
                                       const FProfile& f,
                                       bool relaxed_second) {
  require_orbit_order(A1, A2, V);
  f.validate();
  const int N = params.codim();
  // f = 1 gives a weight factor of exactly 1, so the gap coincides bitwise
  // with the constant-weight interval's.
  const double weight = f.f_min / (std::pow(f.f_max, 2.0 / params.two_sharp()) *
                                   std::pow(f.f_avg, 2.0 / N));
  GuaranteedInterval out;
  condition_upper(out, "i", B0G2);
  condition_gap(out, "ii", B0G2, orbit_volume_gap(params, A1, A2, V) * weight,
                !relaxed_second);
  out.settle();
  return out;
}

ConstantWeightIntervals constant_weight_intervals(const EquationParams& params,
                                                  double A1, double A2,
                                                  double V,
                                                  const ConstantBound& B0G1,
                                                  const ConstantBound& B0G2) {
  require_orbit_order(A1, A2, V);
  const double a1 = orbit_volume_level(params, A1, V);
  const double a2 = orbit_volume_level(params, A2, V);
  const double top = std::min(B0G1.lo(), B0G2.lo());

  ConstantWeightIntervals out;
  GuaranteedInterval& d = out.double_interval;

  if (B0G2.upper_known()) {
    out.double_precondition = definitely_less(B0G2.hi() - a2, B0G1.lo() - a1);
    d.note("separation", out.double_precondition
                             ? ConditionStatus::Satisfied
                             : ConditionStatus::Unsatisfiable,
           "B0,G2 - a2 = " + num(B0G2.hi() - a2) + " vs B0,G1 - a1 = " +
               num(B0G1.lo() - a1));
    // Existence below min B0,G_i makes the lower inequality non-strict.
    d.require_at_least("lower", B0G2.hi() - orbit_volume_gap(params, A1, A2, V),
                       false);
  } else {
    d.mark_unknown("separation", "needs an upper bound for B0,G2");
  }
  d.require_at_most("upper", top, true);

  out.triple_precondition = definitely_less(a2, top);
  GuaranteedInterval t = d;
  t.note("triple", out.triple_precondition ? ConditionStatus::Satisfied
                                           : ConditionStatus::Unsatisfiable,
         "A2^{2/N}/(K V^{2/N}) = " + num(a2) + " vs min B0,G_i = " + num(top));
  t.require_at_least("constant-energy", a2, false);
  if (!out.double_precondition)
    d.mark_empty("separation", "the separation hypothesis fails");
  if (!out.double_precondition || !out.triple_precondition)
    t.mark_empty("triple", "hypotheses of the triple multiplicity fail");
  d.settle();
  t.settle();
  out.triple_interval = std::move(t);
  return out;
}

PairwiseSeparation pairwise_energy_separation(
    const EquationParams& params, const std::vector<GroupEntry>& groups,
    double alpha, const FProfile& f, double V, const ConstantBound& B0) {
  const int n = params.n;
  if (n <= 4)
    throw HypothesisError("pairwise separation requires n > 4");
  for (const auto& g : groups)
    if (g.k != params.k)
      throw HypothesisError("all groups must share the minimal orbit "
                            "dimension k");
  f.validate();
  const int N = params.codim();
  const double nn = n, NN = N;

  PairwiseSeparation out;
  double min_b = kInf;
  for (const auto& g : groups)
    min_b = std::min(min_b, g.B0G.lo());
  const double low = nn * (nn - 4.0) / ((nn - 2.0) * (nn - 2.0)) * B0.hi();
  out.alpha_admissible = alpha >= low && alpha <= min_b;

  const double base =
      std::pow(sobolev_constant(n), nn / (nn - 2.0)) *
      std::pow(sobolev_constant(N), -2.0 / (nn - 2.0)) *
      std::pow((nn - 2.0) * (nn - 2.0) / (nn * (nn - 4.0)), nn / (nn - 2.0)) *
      std::pow(f.f_avg * V / f.f_max, 2.0 * (NN - 2.0) / (NN * (nn - 2.0)));

  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const double Ai = groups[i].A, Aj = groups[j].A;
      if (!(Aj < Ai))
        continue;
      PairVerdict v{i, j, std::pow(Ai / Aj, 2.0 / NN), 0.0,
                    ConditionStatus::NeedsUnknownConstant};
      if (groups[i].B0G.upper_known()) {
        v.rhs = 1.0 + (groups[i].B0G.hi() - alpha) * base *
                          std::pow(Ai, 4.0 / (NN * (nn - 2.0)));
        v.status = v.lhs > v.rhs ? ConditionStatus::Satisfied
                                 : ConditionStatus::Unsatisfiable;
      } else {
        v.rhs = kInf;
      }
      out.verdicts.push_back(v);
    }
  return out;
}

bool example_f_condition(ExampleId id, const ExampleParams& p,
                         const FProfile& f) {
  f.validate();
  const double n = p.n;
  switch (id) {
  case ExampleId::SphereFree: {
    if (f.vanishing_order < p.n - 3)
      throw PreconditionError("sphere-free: derivatives of f at the peak must "
                              "vanish up to order n - 3");
    const double B0G2 = b0_bounds_quotient_sphere(p.n, p.A2).hi();
    const double rhs =
        (B0G2 - n * n * (n - 4.0) / (4.0 * (n - 2.0))) *
        std::pow((n - 2.0) * (n - 2.0) / (n * (n - 4.0)), n / (n - 2.0)) *
        4.0 * std::pow(static_cast<double>(p.A2), 4.0 / (n * (n - 2.0))) /
        (n * (n - 2.0)) /
        (std::pow(static_cast<double>(p.A2) / p.A1, 2.0 / n) - 1.0);
    return std::pow(f.f_max / f.f_avg, 2.0 / n) >= rhs;
  }
  case ExampleId::CircleSphereFinite: {
    if (f.vanishing_order < p.n - 2)
      throw PreconditionError("circle-sphere-finite: derivatives of f at the "
                              "peak must vanish up to order n - 2");
    const double rhs =
        ((n - 2.0) * (n - 2.0) / 4.0 + 1.0 / (4.0 * p.t * p.t)) *
        sobolev_constant(p.n) *
        std::pow(static_cast<double>(p.A2), 4.0 / (n * (n - 2.0))) *
        std::pow(2.0 * pi * p.t * sphere_volume(p.n - 1), 2.0 / n) /
        (std::pow(static_cast<double>(p.A2) / p.A1, 2.0 / n) - 1.0) *
        std::pow((n - 2.0) * (n - 2.0) / (n * (n - 4.0)), n / (n - 2.0));
    return std::pow(f.f_max / f.f_avg, 2.0 / n) >= rhs;
  }
  case ExampleId::CircleSphereSphere: {
    if (f.laplacian_at_peak != 0.0)
      throw PreconditionError("circle-sphere-sphere: requires Delta f(x0) = 0");
    const double m = n - 3.0;
    const double rhs =
        std::pow(std::pow(4.0 * p.a * p.b2, 2.0 / m) - 1.0, -m / 2.0) *
        std::pow((n - 5.0) * (n - 5.0) / (m * (n - 7.0)),
                 m * m / (2.0 * (n - 5.0)));
    return f.f_max / f.f_avg >= rhs;
  }
  case ExampleId::CircleSphereConstant:
  case ExampleId::Hopf:
  case ExampleId::CircleSphereOrthogonal:
    if (!f.is_constant())
      throw PreconditionError(std::string(to_string(id)) +
                              ": the weight must be constant (f = 1)");
    return true;
  }
  return true;
}

namespace {

ExampleInterval critical_finite(const ExampleConfiguration& cfg,
                                const FProfile& f) {
  const auto& p = cfg.params;
  const int n = p.n;
  const EquationParams eq(n, 0);
  ExampleInterval r{cfg.id, p, {}, {}};

  ConstantBound B0 = ConstantBound::exact(0.0);
  ConstantBound B0G2 = B0;
  if (cfg.id == ExampleId::SphereFree) {
    B0 = b0_sphere(n);
    B0G2 = transfer_finite_principal(b0_bounds_quotient_sphere(n, p.A2), cfg.g2);
    r.bounds.push_back({"B0(M)", B0, "sphere-exact"});
    r.bounds.push_back({"B0,G2", B0G2, "quotient-sphere"});
  } else {
    B0 = b0_bounds_circle_sphere(p.t, n);
    B0G2 = transfer_finite_principal(b0_bounds_circle_sphere(p.t / p.A2, n),
                                     cfg.g2);
    r.bounds.push_back({"B0(M)", B0, "circle-sphere"});
    r.bounds.push_back({"B0,G2", B0G2, "principal-transfer"});
  }

  if (!example_f_condition(cfg.id, p, f))
    throw PreconditionError(std::string(to_string(cfg.id)) +
                            ": the sufficient condition on max f / <f> fails");

  const auto e1 = existence_alpha_bound(eq, cfg.g1, f);
  const auto e2 = existence_alpha_bound(eq, cfg.g2, f);
  if (!e1.flatness_ok || !e2.flatness_ok)
    throw PreconditionError(std::string(to_string(cfg.id)) +
                            ": existence requires (n-4-k) Delta f(x0) = 0");

  // Solutions below the existence threshold relax the third condition.
  auto out = sobolev_multiplicity_interval(eq, p.A1, p.A2, cfg.manifold.volume,
                                           B0, B0G2, f, true);
  // The endpoint alpha_sup is covered by the prescribed-curvature case.
  out.require_at_most("existence", std::min(e1.alpha_sup, e2.alpha_sup), false);
  out.settle();
  r.interval = std::move(out);
  return r;
}

ExampleInterval overcritical_product(const ExampleConfiguration& cfg,
                                     const FProfile& f) {
  const auto& p = cfg.params;
  const int n = p.n;
  const EquationParams eq(n, 3);
  ExampleInterval r{cfg.id, p, {}, {}};

  const ConstantBound B0G2 = transfer_finite_principal(b0_sphere(n - 3), cfg.g2);
  r.bounds.push_back({"B0,G2", B0G2, "principal-transfer"});

  if (!example_f_condition(cfg.id, p, f))
    throw PreconditionError(
        "circle-sphere-sphere: the sufficient condition on max f / <f> fails");

  const auto e1 = existence_alpha_bound(eq, cfg.g1, f);
  const auto e2 = existence_alpha_bound(eq, cfg.g2, f);
  auto out = invariant_multiplicity_interval(eq, cfg.g1.A, cfg.g2.A,
                                             cfg.manifold.volume, B0G2, f, true);
  out.require_at_most("existence G2", e2.alpha_sup, true);
  out.require_at_most("existence G1", e1.alpha_sup, true);
  out.settle();
  r.interval = std::move(out);
  return r;
}

ExampleInterval constant_circle(const ExampleConfiguration& cfg) {
  const auto& p = cfg.params;
  const EquationParams eq(p.n, 0);
  ExampleInterval r{cfg.id, p, {}, {}};
  const auto B0G1 =
      transfer_finite_principal(b0_bounds_circle_sphere(p.t / p.A1, p.n), cfg.g1);
  const auto B0G2 =
      transfer_finite_principal(b0_bounds_circle_sphere(p.t / p.A2, p.n), cfg.g2);
  r.bounds.push_back({"B0,G1", B0G1, "principal-transfer"});
  r.bounds.push_back({"B0,G2", B0G2, "principal-transfer"});

  auto cw = constant_weight_intervals(eq, p.A1, p.A2, cfg.manifold.volume,
                                      B0G1, B0G2);
  auto out = std::move(cw.triple_interval);
  // The upper endpoint is reached through the Yamabe problem on the quotients.
  if (!out.empty && out.hi == (p.n - 2.0) * (p.n - 2.0) / 4.0)
    out.hi_strict = false;
  out.settle();
  r.interval = std::move(out);
  return r;
}

ExampleInterval constant_orbit_circle(const ExampleConfiguration& cfg) {
  const auto& p = cfg.params;
  const int n = p.n;
  const EquationParams eq(n, 1);
  ExampleInterval r{cfg.id, p, {}, {}};

  const auto B0G2 = transfer_finite_principal(b0_sphere(n - 1), cfg.g2);
  const auto lb = b0_lower_general(eq, cfg.manifold, cfg.g1,
                                   LowerBoundOptions{.allow_low_codimension = true});
  const auto B0G1 = lb.as_bound();
  r.bounds.push_back({"B0,G1", B0G1, "general-lower"});
  r.bounds.push_back({"B0,G2", B0G2, "principal-transfer"});

  auto cw = constant_weight_intervals(eq, cfg.g1.A, cfg.g2.A,
                                      cfg.manifold.volume, B0G1, B0G2);
  auto out = std::move(cw.double_interval);
  if (lb.beyond_stated_codimension)
    out.note("B0,G1 lower bound", ConditionStatus::Info,
             "general lower bound evaluated with n - k <= 4");
  if (lb.conservative)
    out.note("B0,G1 lower bound", ConditionStatus::Info,
             "curvature term uses only the sign of Lap(v_H)");
  if (!cw.triple_precondition)
    out.note("triple", ConditionStatus::Unsatisfiable,
             "the constant solution is not separated on this interval");
  r.interval = std::move(out);
  return r;
}

} // namespace

ExampleInterval example_interval(ExampleId id, const ExampleParams& params,
                                 const FProfile& f) {
  f.validate();
  const auto cfg = example_configuration(id, params);
  switch (id) {
  case ExampleId::SphereFree:
  case ExampleId::CircleSphereFinite:
    return critical_finite(cfg, f);
  case ExampleId::CircleSphereSphere:
    return overcritical_product(cfg, f);
  case ExampleId::CircleSphereConstant:
    example_f_condition(id, params, f);
    return constant_circle(cfg);
  case ExampleId::Hopf:
  case ExampleId::CircleSphereOrthogonal:
    example_f_condition(id, params, f);
    return constant_orbit_circle(cfg);
  }
  throw DomainError("unknown example");
}

FProfile default_f_profile(ExampleId id, const ExampleParams& params) {
  switch (id) {
  case ExampleId::CircleSphereConstant:
  case ExampleId::Hopf:
  case ExampleId::CircleSphereOrthogonal:
    return FProfile::constant(1.0);
  default:
    break;
  }
  FProfile f;
  f.f_max = f.f_at_peak = 1.0;
  f.f_avg = 1e-6;
  f.f_min = 1e-7;
  f.laplacian_at_peak = 0.0;
  f.vanishing_order = params.n;
  return f;
}

} // namespace critmult
