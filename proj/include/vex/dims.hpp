#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vex/space.hpp"

namespace vex {

// Scaling-exponent estimates for the measure: doubling constant, the
// small-scale and large-scale ball-ratio functions, and local lower/upper
// dimensions with their bounds over a region. All limits are tail estimates
// on log grids of scales; every report carries usability and convergence
// flags because a fixed discrete space bounds the resolution.

struct DimensionBounds {
  double dim_lower = 0.0;  // min over the region of per-point lower dims
  std::optional<double> dim_inf_lower;  // large-scale analogues (truncated
  std::optional<double> dim_inf_upper;  // unbounded models only)
  std::map<int, std::pair<double, double>> per_point;  // point -> (lower, upper)
  bool converged = true;
};

struct DoublingReport {
  double C = 0.0;
  int worst_center = -1;
  double worst_radius = 0.0;
};

// max over sampled (center, radius) of interpolated-ball-measure(2r) / (r).
// Radii are the distinct pairwise distances up to diameter/2, thinned to 64
// log-spaced values on large spaces.
DoublingReport doubling_constant(const Space& s);

struct ScaleEstimate {
  double value = 0.0;
  int used = 0;        // usable base scales in the grid
  bool ok = false;     // false: the grid exhausted the space's resolution
  bool converged = false;
};

// Small-scale ratio mu0(x,r): tail estimate of the upper limit of
// muB(x, r h)/muB(x, h) as h -> 0. A base scale h is usable when both h and
// r h stay inside [8 * min spacing, diameter/2]; the estimate is the max
// over the smallest usable quarter of the grid.
ScaleEstimate mu0(const Space& s, int x, double r, const std::vector<double>& h_grid);

// Large-scale analogue (h -> infinity) for truncated unbounded models: the
// trusted window is [32 * min spacing, diameter/4] and the tail is the
// largest usable quarter (the top scales the truncation supports).
ScaleEstimate mu_infinity(const Space& s, int x, double r, const std::vector<double>& h_grid);

// Quarter-octave default scale grids for the two regimes.
std::vector<double> default_scale_grid_zero(const Space& s);
std::vector<double> default_scale_grid_infinity(const Space& s);

struct LocalDims {
  double lower = 0.0;
  double upper = 0.0;
  bool converged = false;
};

// ln mu0(x, r)/ln r at r = 1/16 and r = 16; reported as (min, max) of the
// two estimates so lower <= upper always holds.
LocalDims local_dims(const Space& s, int x);

// Region bounds: dim_lower = min of per-point lower dims over the region;
// large-scale bounds sampled at up to 16 region points when the space is a
// declared truncation of an unbounded model.
DimensionBounds dim_bounds(const Space& s, const std::vector<int>& region);

}  // namespace vex
