#pragma once
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace vex {

// A discretized measure space: N points, a quasimetric, positive point
// masses. Built-ins are midpoint-cell discretizations (each node carries its
// cell mass), so the measure is atomic; limit statements about vanishing
// point mass only hold under refinement.

enum class SpaceKind { interval, circle, curve, cloud };

struct Space {
  SpaceKind kind = SpaceKind::interval;
  int n = 0;

  double a = 0.0, b = 0.0;  // interval endpoints (interval kind)
  double h = 0.0;           // cell width: interval length/n, circle/curve arc step
  double period = 0.0;      // coordinate period (circle: 2*pi)

  std::vector<double> x;                   // node coordinate (position / angle)
  std::vector<std::complex<double>> z;     // planar embedding (circle, curve)
  std::vector<std::complex<double>> tang;  // unit tangents (circle, curve)
  std::vector<double> mass;
  std::vector<double> dist_mat;            // cloud only, row-major n*n

  double kappa = 1.0;  // quasi-triangle constant
  double diameter = 0.0;
  double total_mass = 0.0;
  double min_sp = 0.0;  // smallest nonzero pairwise distance
  bool periodic = false;
  bool truncated_unbounded = false;  // grid models a truncation of an unbounded space
  std::string id;

  // Distances are canonical: grids use index arithmetic (h*|i-j|, arc wrap),
  // curves use chordal distance, clouds read the stored matrix. The index
  // forms make symmetric pairs exactly tied in floating point, which the
  // tier grouping below relies on.
  double dist(int i, int j) const;
  double min_spacing() const;
};

// One distance tier around a center: all points whose distance from the
// center ties (exactly on grids, within 1e-9 relative elsewhere). cum_mass
// accumulates masses through this tier, center atom included; tier 0 is the
// center itself at distance 0.
struct Tier {
  double dist;
  double mass;
  double cum_mass;
};

struct Ball {
  std::vector<int> members;
  double measure = 0.0;
};

// Values sampled at a space's nodes. Numeric routines take plain vectors;
// this wrapper carries the space id for file round-trips and tools.
struct GridFunction {
  std::string space_id;
  std::vector<double> re;
  std::vector<double> im;  // empty for real-valued data
  bool is_complex() const { return !im.empty(); }
  int size() const { return static_cast<int>(re.size()); }
};

Space build_interval_grid(double a, double b, int n);
Space build_circle_grid(int n);

// Carleson curves: n points at equal arc-length steps, chordal metric,
// masses = total length / n. The circle curve places nodes at the same
// angles as build_circle_grid so grid functions carry over index-wise.
Space build_curve_circle(int n);
Space build_curve_ellipse(double a, double b, int n);
Space build_curve_polygon(const std::vector<std::complex<double>>& vertices, int n);

// Custom point cloud from a dense distance matrix. kappa is brute-forced at
// load (O(n^3)) unless a hint is supplied.
Space build_cloud(std::vector<double> dist_mat, std::vector<double> masses,
                  std::optional<double> kappa_hint = std::nullopt);

// Strict ball {j : d(center, j) < r}; r <= min neighbor distance yields
// exactly the center atom. Members are in ascending index order.
Ball ball(const Space& s, int center, double r);
double ball_measure(const Space& s, int center, double r);

// Distance tiers around a center, ascending. O(1) closed form per tier on
// grids; sort + tolerance grouping on curves and clouds.
std::vector<Tier> sorted_tiers(const Space& s, int center);

// Ball-measure interpolant: piecewise-linear through the tier "edge" nodes
// (r_k = midpoint of consecutive distinct tier distances, value = cumulative
// mass through the lower tier). On calibration measures these nodes sit
// exactly on the continuum curves, which removes the staircase bias of the
// raw tier counts. Clamps to the center atom below the first edge and to the
// total through the terminal edge (last tier distance plus half the final gap).
double ball_measure_interp(const std::vector<Tier>& tiers, double r);

// Same geometry, different masses (weighted-measure models). Validates
// positivity and recomputes the totals.
Space with_masses(Space s, std::vector<double> masses);

// Fixed-order serial sum of f_i * mass_i (the module's one integration rule;
// midpoint quadrature on the uniform grids).
double integrate(const std::vector<double>& f, const Space& s);

}  // namespace vex
