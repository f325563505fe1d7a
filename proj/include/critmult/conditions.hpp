#pragma once

#include "critmult/best_constants.hpp"
#include "critmult/constants.hpp"
#include "critmult/geometry.hpp"

#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace critmult {

/// Scalar statistics of the positive weight f.
struct FProfile {
  double f_max = 1.0;
  double f_min = 1.0;
  double f_avg = 1.0;
  double f_at_peak = 1.0;
  double laplacian_at_peak = 0.0; // Delta_g f(x0), Delta = -div grad
  int vanishing_order = 2;        // derivatives at x0 vanish through this order

  static FProfile constant(double c = 1.0);
  bool is_constant() const { return f_min == f_max; }
  void validate() const;
};

/// Constants of a generic inequality |u|_crit^2 <= P (|grad u|_2^2 + D |u|_2^2).
struct GenericIneqParams {
  double crit = 3.0;
  double P = 1.0;
  double D = 0.0;

  void validate() const;
  double factor() const { return (4.0 - crit) * crit / 4.0; }
};

/// Parameters for the full (non-invariant) optimal Sobolev inequality.
GenericIneqParams sobolev_specialization(const EquationParams& params,
                                         double D);
/// Parameters for the optimal G2-invariant inequality.
GenericIneqParams invariant_specialization(const EquationParams& params,
                                           double A2, double D);

enum class ConditionStatus { Satisfied, Unsatisfiable, NeedsUnknownConstant, Info };
std::string_view to_string(ConditionStatus s);

struct ConditionVerdict {
  std::string label;
  ConditionStatus status = ConditionStatus::Info;
  std::string detail;
  double threshold = std::numeric_limits<double>::quiet_NaN();
};

/// A set of alpha on which a conclusion is guaranteed, with endpoint
/// strictness. Starts as (0, +inf).
struct GuaranteedInterval {
  double lo = 0.0;
  double hi = kInf;
  bool lo_strict = true;
  bool hi_strict = true;
  bool empty = false;
  bool unknown = false; // empty because a needed constant has no known bound
  std::vector<ConditionVerdict> diagnostics;

  void raise_lower(double value, bool strict);
  void lower_upper(double value, bool strict);
  // Tighten and record a labelled condition alpha >= value / alpha <= value.
  void require_at_least(std::string label, double value, bool strict);
  void require_at_most(std::string label, double value, bool strict);
  void mark_unknown(std::string label, std::string detail);
  void mark_empty(std::string label, std::string detail);
  void note(std::string label, ConditionStatus status, std::string detail = {},
            double threshold = std::numeric_limits<double>::quiet_NaN());
  // Recomputes `empty` from the endpoints (sticky once set by mark_*) and
  // turns recorded conditions Unsatisfiable when the result is empty.
  void settle();
  bool contains(double alpha) const;
};

/// Upper bound A^{2/N} / (K_N (max f)^{2/2#}) for the infimum of the
/// invariant quotient; strictly below it a minimizing solution exists.
double faget_threshold(const EquationParams& params, double A,
                       const FProfile& f);

struct ExistenceBound {
  bool flatness_ok = false;
  double alpha_sup = 0.0; // existence guaranteed for alpha < alpha_sup
};

ExistenceBound existence_alpha_bound(const EquationParams& params,
                                     const GroupActionSpec& action,
                                     const FProfile& f);

/// Multiplicity interval from the generic inequality (crit, P, D).
/// `relaxed_third` drops strictness of the third condition, valid when one of
/// the two solutions lies strictly below its existence threshold.
GuaranteedInterval generic_multiplicity_interval(
    const EquationParams& params, const GenericIneqParams& gen, double A1,
    double A2, double V, const ConstantBound& B0G2, const FProfile& f,
    bool relaxed_third = false);

/// Direct evaluation with the full Sobolev inequality (crit = 2n/(n-2),
/// P = K_n, D = B_0(M)). Requires n > 4.
GuaranteedInterval sobolev_multiplicity_interval(
    const EquationParams& params, double A1, double A2, double V,
    const ConstantBound& B0, const ConstantBound& B0G2, const FProfile& f,
    bool relaxed_third = false);

/// Direct evaluation with the G2-invariant inequality (crit = 2#,
/// P = K_N A2^{-2/N}, D = B_{0,G2}). Requires n - k > 4.
GuaranteedInterval invariant_multiplicity_interval(
    const EquationParams& params, double A1, double A2, double V,
    const ConstantBound& B0G2, const FProfile& f, bool relaxed_third = false);

/// (A2^{2/N} - A1^{2/N}) / (K_N V^{2/N}).
double orbit_volume_gap(const EquationParams& params, double A1, double A2,
                        double V);
/// A^{2/N} / (K_N V^{2/N}).
double orbit_volume_level(const EquationParams& params, double A, double V);

/// Multiplicity interval bounding the L2 norm through min f.
GuaranteedInterval volume_gap_interval(const EquationParams& params,
                                       double A1, double A2, double V,
                                       const ConstantBound& B0G2,
                                       const FProfile& f,
                                       bool relaxed_second = false);

struct ConstantWeightIntervals {
  GuaranteedInterval double_interval; // two solutions, different energies
  GuaranteedInterval triple_interval; // plus the constant solution
  bool double_precondition = false;
  bool triple_precondition = false;
};

/// f = 1: double and triple multiplicity intervals.
ConstantWeightIntervals constant_weight_intervals(const EquationParams& params,
                                                  double A1, double A2,
                                                  double V,
                                                  const ConstantBound& B0G1,
                                                  const ConstantBound& B0G2);

struct GroupEntry {
  int k = 0;
  double A = 1.0;
  ConstantBound B0G = ConstantBound::exact(0.0);
};

struct PairVerdict {
  std::size_t i = 0; // larger orbit volume
  std::size_t j = 0; // smaller orbit volume
  double lhs = 0.0;  // (A_i / A_j)^{2/N}
  double rhs = 0.0;
  ConditionStatus status = ConditionStatus::Info; // Satisfied => E(u_j) < E(u_i)
};

struct PairwiseSeparation {
  bool alpha_admissible = false;
  std::vector<PairVerdict> verdicts;
};

/// Pairwise energy separation for a family of groups sharing k.
PairwiseSeparation pairwise_energy_separation(
    const EquationParams& params, const std::vector<GroupEntry>& groups,
    double alpha, const FProfile& f, double V, const ConstantBound& B0);

/// The example's sufficient condition on f that neutralises the third
/// multiplicity condition. Vacuously true for the f = 1 examples.
bool example_f_condition(ExampleId id, const ExampleParams& params,
                         const FProfile& f);

struct NamedBound {
  std::string label;
  ConstantBound bound;
  std::string source;
};

struct ExampleInterval {
  ExampleId id;
  ExampleParams params;
  GuaranteedInterval interval;
  std::vector<NamedBound> bounds;
};

/// Existence and multiplicity composed into the guaranteed alpha-interval of
/// one example configuration.
ExampleInterval example_interval(ExampleId id, const ExampleParams& params,
                                 const FProfile& f);

/// Default weight profile for `table`/`interval`: f = 1 for the constant-weight
/// examples, a sharply peaked flat-at-peak profile otherwise.
FProfile default_f_profile(ExampleId id, const ExampleParams& params);

} // namespace critmult
