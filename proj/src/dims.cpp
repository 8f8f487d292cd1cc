#include "vex/dims.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vex {

namespace {

std::vector<double> geometric_grid(double lo, double hi) {
  std::vector<double> g;
  if (!(lo > 0.0) || !(hi > lo)) return g;
  const double step = std::pow(2.0, 0.25);
  for (double v = hi; v >= lo * 0.999999; v /= step) g.push_back(v);
  std::reverse(g.begin(), g.end());  // ascending
  return g;
}

struct TailStats {
  double value = 0.0;
  double spread = HUGE_VAL;
  int used = 0;
};

// max over a quarter of the usable ratios; pick_small selects the smallest
// scales (limits at 0), otherwise the largest (limits at infinity)
TailStats tail_max(const std::vector<double>& hs, const std::vector<double>& ratios,
                   bool pick_small) {
  TailStats t;
  t.used = static_cast<int>(hs.size());
  if (hs.empty()) return t;
  const std::size_t q = std::max<std::size_t>(1, hs.size() / 4);
  // hs is ascending
  const std::size_t lo = pick_small ? 0 : hs.size() - q;
  const std::size_t hi = pick_small ? q : hs.size();
  double vmax = 0.0, vmin = HUGE_VAL;
  for (std::size_t i = lo; i < hi; ++i) {
    vmax = std::max(vmax, ratios[i]);
    vmin = std::min(vmin, ratios[i]);
  }
  t.value = vmax;
  t.spread = vmin > 0.0 ? vmax / vmin : HUGE_VAL;
  return t;
}

ScaleEstimate scale_ratio(const Space& s, int x, double r,
                          const std::vector<double>& h_grid, double window_lo,
                          double window_hi, bool pick_small) {
  if (!(r > 0.0)) throw std::invalid_argument("scale ratio needs r > 0");
  if (x < 0 || x >= s.n) throw std::invalid_argument("center out of range");
  const auto tiers = sorted_tiers(s, x);
  std::vector<double> hs, ratios;
  for (double h : h_grid) {
    const double a = std::min(h, r * h), b = std::max(h, r * h);
    if (a < window_lo || b > window_hi) continue;
    const double denom = ball_measure_interp(tiers, h);
    if (!(denom > 0.0)) continue;
    hs.push_back(h);
    ratios.push_back(ball_measure_interp(tiers, r * h) / denom);
  }
  ScaleEstimate out;
  const TailStats t = tail_max(hs, ratios, pick_small);
  out.used = t.used;
  out.ok = t.used >= 1;
  out.value = t.value;
  out.converged = t.used >= 8 && t.spread < 1.10;
  return out;
}

}  // namespace

std::vector<double> default_scale_grid_zero(const Space& s) {
  return geometric_grid(s.min_spacing() * 0.5, s.diameter * 0.5);
}

std::vector<double> default_scale_grid_infinity(const Space& s) {
  return geometric_grid(s.min_spacing() * 32.0, s.diameter * 0.25);
}

ScaleEstimate mu0(const Space& s, int x, double r, const std::vector<double>& h_grid) {
  return scale_ratio(s, x, r, h_grid, 8.0 * s.min_spacing(), 0.5 * s.diameter, true);
}

ScaleEstimate mu_infinity(const Space& s, int x, double r,
                          const std::vector<double>& h_grid) {
  return scale_ratio(s, x, r, h_grid, 32.0 * s.min_spacing(), 0.25 * s.diameter, false);
}

LocalDims local_dims(const Space& s, int x) {
  const auto grid = default_scale_grid_zero(s);
  const ScaleEstimate small = mu0(s, x, 1.0 / 16.0, grid);
  const ScaleEstimate large = mu0(s, x, 16.0, grid);
  LocalDims d;
  if (!small.ok || !large.ok) return d;  // converged stays false
  const double est_small = std::log(small.value) / std::log(1.0 / 16.0);
  const double est_large = std::log(large.value) / std::log(16.0);
  d.lower = std::min(est_small, est_large);
  d.upper = std::max(est_small, est_large);
  d.converged = small.converged && large.converged;
  return d;
}

DimensionBounds dim_bounds(const Space& s, const std::vector<int>& region) {
  if (region.empty()) throw std::invalid_argument("region must be nonempty");
  DimensionBounds b;
  b.dim_lower = HUGE_VAL;
  for (int x : region) {
    const LocalDims d = local_dims(s, x);
    b.per_point[x] = {d.lower, d.upper};
    if (d.lower > 0.0) b.dim_lower = std::min(b.dim_lower, d.lower);
    b.converged = b.converged && d.converged;
  }
  if (!(b.dim_lower < HUGE_VAL)) {
    b.dim_lower = 0.0;
    b.converged = false;
  }
  if (s.truncated_unbounded) {
    const auto grid = default_scale_grid_infinity(s);
    const std::size_t step = std::max<std::size_t>(1, region.size() / 16);
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    bool any = false;
    for (std::size_t i = 0; i < region.size(); i += step) {
      const int x = region[i];
      const ScaleEstimate small = mu_infinity(s, x, 1.0 / 16.0, grid);
      const ScaleEstimate large = mu_infinity(s, x, 16.0, grid);
      if (!small.ok || !large.ok) continue;
      const double est_small = std::log(small.value) / std::log(1.0 / 16.0);
      const double est_large = std::log(large.value) / std::log(16.0);
      lo = std::min(lo, std::min(est_small, est_large));
      hi = std::max(hi, std::max(est_small, est_large));
      any = true;
      b.converged = b.converged && small.converged && large.converged;
    }
    if (any) {
      b.dim_inf_lower = lo;
      b.dim_inf_upper = hi;
    } else {
      b.converged = false;
    }
  }
  return b;
}

DoublingReport doubling_constant(const Space& s) {
  // global distinct radii up to diameter/2
  std::vector<double> radii;
  if (s.kind == SpaceKind::interval || s.kind == SpaceKind::circle) {
    for (int m = 1; m * s.h <= 0.5 * s.diameter; ++m) radii.push_back(m * s.h);
  } else {
    std::vector<double> all;
    for (int i = 0; i < s.n; ++i)
      for (int j = i + 1; j < s.n; ++j) {
        const double d = s.dist(i, j);
        if (d <= 0.5 * s.diameter) all.push_back(d);
      }
    std::sort(all.begin(), all.end());
    for (double d : all)
      if (radii.empty() || d - radii.back() > 1e-9 * d) radii.push_back(d);
  }
  if (radii.empty() && s.diameter > 0.0) radii.push_back(0.5 * s.diameter);
  if (radii.size() > 64 && s.n > 512) {
    // thin to 64 log-spaced picks
    std::vector<double> thin;
    const double lo = radii.front(), hi = radii.back();
    for (int k = 0; k < 64; ++k) {
      const double target = lo * std::pow(hi / lo, k / 63.0);
      const auto it = std::lower_bound(radii.begin(), radii.end(), target);
      const double pick = it == radii.end() ? radii.back() : *it;
      if (thin.empty() || pick > thin.back()) thin.push_back(pick);
    }
    radii = std::move(thin);
  }

  DoublingReport rep;
  for (int c = 0; c < s.n; ++c) {
    const auto tiers = sorted_tiers(s, c);
    for (double r : radii) {
      const double m1 = ball_measure_interp(tiers, r);
      if (!(m1 > 0.0)) continue;
      const double ratio = ball_measure_interp(tiers, 2.0 * r) / m1;
      if (ratio > rep.C) {
        rep.C = ratio;
        rep.worst_center = c;
        rep.worst_radius = r;
      }
    }
  }
  return rep;
}

}  // namespace vex
