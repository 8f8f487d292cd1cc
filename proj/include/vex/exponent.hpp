#pragma once
#include <optional>
#include <vector>

#include "vex/space.hpp"

namespace vex {

// Variable exponent p(.) sampled at the space's nodes, constrained to
// 1 < min p <= max p < infinity. An optional declared tail pins p to a
// constant outside a ball around tail_center; construction verifies and
// snaps the tail samples exactly.
struct VariableExponent {
  std::vector<double> p;
  double pmin = 0.0;
  double pmax = 0.0;
  std::optional<double> tail_constant;
  double tail_radius = 0.0;
  int tail_center = 0;

  double operator[](int i) const { return p[i]; }
  int size() const { return static_cast<int>(p.size()); }
};

VariableExponent make_exponent(const Space& s, std::vector<double> samples,
                               std::optional<double> tail_constant = std::nullopt,
                               double tail_radius = 0.0, int tail_center = 0);

VariableExponent constant_exponent(const Space& s, double value);

// p varies linearly in the node coordinate from value_left (at x = a, or
// angle -pi) to value_right.
VariableExponent affine_exponent(const Space& s, double value_left, double value_right);

// C1 smoothstep ramp in the node coordinate: value_left for x <= x0,
// value_right for x >= x1, 3t^2-2t^3 blend between. Used to build exponents
// with honest constant tails.
VariableExponent smoothstep_exponent(const Space& s, double value_left,
                                     double value_right, double x0, double x1);

// Pointwise conjugate p'(x) = p(x)/(p(x)-1); involution to machine precision.
VariableExponent dual_exponent(const VariableExponent& p);

struct WeakLipschitzReport {
  bool holds = false;
  double best_A = 0.0;  // max over pairs with d <= 1/2 of |p(x)-p(y)| ln(1/d)
  int arg_i = -1, arg_j = -1;
};

// Log-Lipschitz regularity scan. Finite on any discrete space; the
// interesting signal is whether best_A stays bounded under refinement,
// which callers probe by running at several resolutions.
WeakLipschitzReport check_weak_lipschitz(const VariableExponent& p, const Space& s);

}  // namespace vex
