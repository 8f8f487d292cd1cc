#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "vex/dims.hpp"
#include "vex/exponent.hpp"
#include "vex/space.hpp"

namespace vex {

// Radial weight machinery: factor evaluation, scaling-index estimation at 0
// and at infinity, integral-class membership, Muckenhoupt checks, and the
// admissibility verdicts that combine indices with dimension bounds.

struct Factor {
  enum class Kind { power, powerlog, tabulated };
  Kind kind = Kind::power;
  double beta = 0.0;
  double gamma = 0.0;                    // powerlog only
  std::function<double(double)> table;   // tabulated only

  double eval(double t) const;      // power: t^beta; powerlog: t^beta (1+|ln t|)^gamma
  double eval_log(double log_t) const;  // ln eval(e^{log_t}), overflow-free
  bool analytic() const { return kind != Kind::tabulated; }
};

Factor power_factor(double beta);
Factor powerlog_factor(double beta, double gamma);
Factor tabulated_factor(std::function<double(double)> f);

struct Anchor {
  int point = 0;
  Factor factor;
};

// rho(x) = prod_k factor_k(d(x, x_k)) * infinity_factor(1 + d(x0, x)).
struct WeightSpec {
  std::vector<Anchor> anchors;
  std::optional<Factor> infinity_factor;
  int infinity_center = 0;  // x0
};

// Pointwise evaluation; d = 0 at an anchor is regularized to half the min
// spacing so negative powers stay finite.
std::vector<double> eval_weight(const WeightSpec& spec, const Space& s);

// Spec for rho^c: multiplies every power (and log power) by c.
WeightSpec pow_spec(const WeightSpec& spec, double c);

// Estimation protocol: base scales h = 2^{-j} (2^{+j} at infinity),
// j = j0..j1; ratio arguments t = 2^{i/4}, i = 1..t_count.
struct ScaleGridSpec {
  int j0 = 4;
  int j1 = 40;
  int t_count = 32;
};

struct WeightIndices {
  double m = 0.0;
  double M = 0.0;  // m <= M always
  bool converged = false;
  ScaleGridSpec grid;
};

// Lower/upper scaling indices of a factor near 0. Analytic factors are
// extrapolated (quadratic fit in 1/(1+ln(1/h)) over the deepest half, per
// ratio argument t, then min/max over t); tabulated factors use the raw
// tail protocol (min/max of the log-ratio over the deepest quarter, then
// max over t). Convergence flag: deepening j1 by 8 moves both indices by
// less than 1e-3.
WeightIndices mo_indices(const Factor& f, const ScaleGridSpec& grid = {});

// Mirror protocol with h = 2^{+j} (behavior near infinity).
WeightIndices mo_indices_infinity(const Factor& f, const ScaleGridSpec& grid = {});

struct ZbsReport {
  bool member = false;
  double c_estimate = 0.0;
  bool integral_ok = false;       // finite stable c across the h-grid
  bool indices_ok = false;        // 0 < m <= M < delta
  bool diverged_at_zero = false;  // first integral fails to converge at 0
  WeightIndices indices;
};

// Membership in the integral class with parameter delta on (0, ell]: both
// defining integrals are evaluated by log-substituted trapezoid quadrature
// over an h-grid; the verdict combines integral stability with the index
// criterion, and both are reported.
ZbsReport check_zbs(const Factor& f, double delta, double ell);

struct ClassReport {
  bool member = false;
  double margin = 0.0;  // smallest slack across all strict inequalities
  bool converged = true;
};

// Power-weight admissibility: -dim/p(x_k) < beta_k < dim/p'(x_k) at every
// anchor, dim = the region's lower dimension bound; on unbounded models the
// extra sum condition with the mixed lower/upper large-scale bounds.
ClassReport check_V_class(const WeightSpec& spec, const VariableExponent& p,
                          const DimensionBounds& dims);

// Oscillating-weight admissibility: same shape with (m, M) indices of each
// factor in place of beta, and at infinity the summed indices against
// dim_inf/p_inf' minus the dimension-gap correction.
ClassReport check_V_osc_class(const WeightSpec& spec, const VariableExponent& p,
                              const DimensionBounds& dims);

struct MuckenhouptReport {
  double s = 1.0;
  double constant = 0.0;
  bool holds_estimate = false;
  std::vector<double> trend;  // per-resolution constants (one entry if unswept)
  int worst_center = -1;
  double worst_radius = 0.0;
};

// sup over (center, ball) of (avg w)(avg w^{-1/(s-1)})^{s-1} for s > 1; for
// s = 1, sup of (centered ball-average max of w)/w. A single space gives one
// constant; refinement verdicts come from muckenhoupt_trend.
MuckenhouptReport check_muckenhoupt(const std::vector<double>& w, double s_exp,
                                    const Space& sp);

// Same weight model sampled on successively finer spaces; holds_estimate is
// the stabilization verdict (every successive constant ratio < 1.25).
MuckenhouptReport muckenhoupt_trend(
    const std::function<std::vector<double>(const Space&)>& weight_of,
    double s_exp, const std::vector<Space>& spaces);

// Condition "rho(x)^{p(x)} in the Muckenhoupt class at s = min p" for
// bounded spaces: builds the pointwise power and delegates.
MuckenhouptReport theorem_erz_condition(const std::vector<double>& rho,
                                        const VariableExponent& p, const Space& sp);

// Sufficient condition via the auxiliary exponent q1(y) = q(y)(q+ - q0) /
// (q(y) - q0) at s = q+/q0: builds rho^{q1(.)} and delegates.
MuckenhouptReport remark_rem1_condition(const std::vector<double>& rho,
                                        const VariableExponent& q, double q0,
                                        const Space& sp);

}  // namespace vex
