#pragma once
#include <cstdint>
#include <vector>

#include "vex/exponent.hpp"
#include "vex/space.hpp"

namespace vex {

struct NormResult {
  double value = 0.0;
  int iterations = 0;
  double lambda_lo = 0.0, lambda_hi = 0.0;  // final bracket
  double modular_at_value = 0.0;            // in [1-1e-8, 1+1e-8] when value > 0
};

// Sum of |rho_i f_i / lambda|^{p_i} mass_i. Overflow reports +inf, never traps.
double modular(const std::vector<double>& f, const VariableExponent& p,
               const std::vector<double>& rho, const Space& s, double lambda);

// inf{lambda > 0 : modular(f,p,rho,lambda) <= 1}, by doubling/halving from
// max|rho f| to bracket, then bisection to 1e-12 relative width.
NormResult luxemburg_norm(const std::vector<double>& f, const VariableExponent& p,
                          const std::vector<double>& rho, const Space& s);

struct HolderReport {
  double lhs = 0.0;   // integral of |f g|
  double rhs = 0.0;   // 2 * ||rho f||_p * ||g / rho||_p'
  double ratio = 0.0; // lhs / rhs (0 when rhs = 0)
};

// Pairing bound with the pinned constant 2; contract lhs <= rhs.
HolderReport verify_holder(const std::vector<double>& f, const std::vector<double>& g,
                           const VariableExponent& p, const std::vector<double>& rho,
                           const Space& s);

struct DualEstimate {
  double lower_bound = 0.0;
  std::vector<double> best_h;  // normalized maximizer (empty if none scored)
  int best_trial = -1;
};

// Certified lower bound for sup over h >= 0 with ||rho h||_q = 1 of the
// pairing integral of F h. Trial family: duality-optimal shapes, dyadic
// indicators, then seeded Gaussian bumps; every trial is normalized through
// luxemburg_norm; deterministic in (trial_count, seed) and monotone in
// trial_count for a fixed seed.
DualEstimate dual_norm_estimate(const std::vector<double>& F, const VariableExponent& q,
                                const std::vector<double>& rho, const Space& s,
                                int trial_count, std::uint64_t seed);

}  // namespace vex
