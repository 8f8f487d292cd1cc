#include "vex/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vex {

namespace {

void validate(VariableExponent& e) {
  if (e.p.empty()) throw std::invalid_argument("exponent needs samples");
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (double v : e.p) {
    if (!std::isfinite(v)) throw std::invalid_argument("exponent samples must be finite");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo > 1.0)) throw std::invalid_argument("exponent requires min p > 1");
  e.pmin = lo;
  e.pmax = hi;
}

}  // namespace

VariableExponent make_exponent(const Space& s, std::vector<double> samples,
                               std::optional<double> tail_constant,
                               double tail_radius, int tail_center) {
  if (samples.size() != static_cast<std::size_t>(s.n))
    throw std::invalid_argument("exponent sample count must match space");
  VariableExponent e;
  e.p = std::move(samples);
  if (tail_constant) {
    if (!(*tail_constant > 1.0))
      throw std::invalid_argument("tail constant must exceed 1");
    e.tail_constant = tail_constant;
    e.tail_radius = tail_radius;
    e.tail_center = tail_center;
    for (int i = 0; i < s.n; ++i) {
      if (s.dist(tail_center, i) > tail_radius) {
        if (std::abs(e.p[i] - *tail_constant) > 1e-9)
          throw std::invalid_argument("declared tail does not match samples");
        e.p[i] = *tail_constant;
      }
    }
  }
  validate(e);
  return e;
}

VariableExponent constant_exponent(const Space& s, double value) {
  return make_exponent(s, std::vector<double>(s.n, value), value, 0.0, 0);
}

VariableExponent affine_exponent(const Space& s, double value_left, double value_right) {
  const double lo = s.x.front(), hi = s.x.back();
  std::vector<double> p(s.n);
  for (int i = 0; i < s.n; ++i) {
    const double t = (s.x[i] - lo) / (hi - lo);
    p[i] = value_left + (value_right - value_left) * t;
  }
  return make_exponent(s, std::move(p));
}

VariableExponent smoothstep_exponent(const Space& s, double value_left,
                                     double value_right, double x0, double x1) {
  if (!(x0 < x1)) throw std::invalid_argument("smoothstep needs x0 < x1");
  std::vector<double> p(s.n);
  for (int i = 0; i < s.n; ++i) {
    double t = std::clamp((s.x[i] - x0) / (x1 - x0), 0.0, 1.0);
    t = t * t * (3.0 - 2.0 * t);
    p[i] = value_left + (value_right - value_left) * t;
  }
  return make_exponent(s, std::move(p));
}

VariableExponent dual_exponent(const VariableExponent& p) {
  VariableExponent d;
  d.p.resize(p.p.size());
  for (std::size_t i = 0; i < p.p.size(); ++i) d.p[i] = p.p[i] / (p.p[i] - 1.0);
  if (p.tail_constant) {
    d.tail_constant = *p.tail_constant / (*p.tail_constant - 1.0);
    d.tail_radius = p.tail_radius;
    d.tail_center = p.tail_center;
  }
  validate(d);
  return d;
}

WeakLipschitzReport check_weak_lipschitz(const VariableExponent& p, const Space& s) {
  if (s.n < 2) throw std::invalid_argument("regularity scan needs >= 2 points");
  WeakLipschitzReport r;
  r.best_A = 0.0;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      const double d = s.dist(i, j);
      if (d > 0.5 || d <= 0.0) continue;
      const double a = std::abs(p.p[i] - p.p[j]) * std::log(1.0 / d);
      if (a > r.best_A) {
        r.best_A = a;
        r.arg_i = i;
        r.arg_j = j;
      }
    }
  r.holds = std::isfinite(r.best_A);
  return r;
}

}  // namespace vex
