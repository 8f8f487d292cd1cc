#include "vex/space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vex {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int circle_offset(int n, int i, int j) {
  int d = std::abs(i - j);
  return std::min(d, n - d);
}

}  // namespace

double Space::dist(int i, int j) const {
  switch (kind) {
    case SpaceKind::interval:
      return h * std::abs(i - j);
    case SpaceKind::circle:
      return h * circle_offset(n, i, j);
    case SpaceKind::curve:
      return std::abs(z[i] - z[j]);
    case SpaceKind::cloud:
      return dist_mat[static_cast<std::size_t>(i) * n + j];
  }
  return 0.0;
}

double Space::min_spacing() const { return min_sp; }

Space build_interval_grid(double a, double b, int n) {
  require(std::isfinite(a) && std::isfinite(b), "interval endpoints must be finite");
  require(a < b, "interval requires a < b");
  require(n >= 2, "interval requires n >= 2");
  Space s;
  s.kind = SpaceKind::interval;
  s.n = n;
  s.a = a;
  s.b = b;
  s.h = (b - a) / n;
  s.x.resize(n);
  s.mass.assign(n, s.h);
  for (int i = 0; i < n; ++i) s.x[i] = a + (i + 0.5) * s.h;
  s.total_mass = b - a;  // cells partition [a,b]; store the telescoped total
  s.diameter = s.h * (n - 1);
  s.min_sp = s.h;
  s.id = "interval";
  return s;
}

Space build_circle_grid(int n) {
  require(n >= 4, "circle requires n >= 4");
  Space s;
  s.kind = SpaceKind::circle;
  s.n = n;
  s.h = 2.0 * kPi / n;
  s.period = 2.0 * kPi;
  s.periodic = true;
  s.x.resize(n);
  s.z.resize(n);
  s.tang.resize(n);
  s.mass.assign(n, s.h);
  for (int i = 0; i < n; ++i) {
    s.x[i] = -kPi + (i + 0.5) * s.h;
    s.z[i] = std::polar(1.0, s.x[i]);
    s.tang[i] = std::complex<double>(0.0, 1.0) * s.z[i];
  }
  s.total_mass = 2.0 * kPi;
  s.diameter = s.h * (n / 2);
  s.min_sp = s.h;
  s.id = "circle";
  return s;
}

Space build_curve_circle(int n) {
  require(n >= 8, "curve requires n >= 8");
  Space s = build_circle_grid(n);
  s.kind = SpaceKind::curve;
  s.periodic = true;
  s.id = "curve_circle";
  // chordal metric now; refresh the cached extremes
  s.diameter = 0.0;
  s.min_sp = std::abs(s.z[1] - s.z[0]);
  for (int m = 1; m <= n / 2; ++m)
    s.diameter = std::max(s.diameter, std::abs(s.z[m] - s.z[0]));
  return s;
}

namespace {

double ellipse_speed(double a, double b, double t) {
  const double sa = a * std::sin(t), cb = b * std::cos(t);
  return std::sqrt(sa * sa + cb * cb);
}

void finish_generic_curve(Space& s) {
  s.total_mass = 0.0;
  for (double m : s.mass) s.total_mass += m;
  s.diameter = 0.0;
  s.min_sp = HUGE_VAL;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      const double d = std::abs(s.z[i] - s.z[j]);
      s.diameter = std::max(s.diameter, d);
      if (d > 0.0) s.min_sp = std::min(s.min_sp, d);
    }
}

}  // namespace

Space build_curve_ellipse(double a, double b, int n) {
  require(a > 0 && b > 0, "ellipse semi-axes must be positive");
  require(n >= 8, "curve requires n >= 8");
  Space s;
  s.kind = SpaceKind::curve;
  s.n = n;
  s.periodic = true;
  s.id = "curve_ellipse";

  // cumulative arc length over [-pi, pi] on a dense Simpson table
  const int M = 1 << 14;
  const double dt = 2.0 * kPi / M;
  std::vector<double> cum(M + 1, 0.0);
  for (int k = 0; k < M; ++k) {
    const double t0 = -kPi + k * dt;
    const double simpson = (ellipse_speed(a, b, t0) +
                            4.0 * ellipse_speed(a, b, t0 + 0.5 * dt) +
                            ellipse_speed(a, b, t0 + dt)) * dt / 6.0;
    cum[k + 1] = cum[k] + simpson;
  }
  const double L = cum[M];
  s.h = L / n;
  s.x.resize(n);
  s.z.resize(n);
  s.tang.resize(n);
  s.mass.assign(n, s.h);
  for (int i = 0; i < n; ++i) {
    const double target = (i + 0.5) * s.h;
    const auto it = std::lower_bound(cum.begin(), cum.end(), target);
    const int k = std::max<int>(1, static_cast<int>(it - cum.begin()));
    const double frac = (target - cum[k - 1]) / (cum[k] - cum[k - 1]);
    double t = -kPi + (k - 1 + frac) * dt;
    for (int newton = 0; newton < 3; ++newton) {
      const double sk = cum[k - 1] +
          (ellipse_speed(a, b, -kPi + (k - 1) * dt) + ellipse_speed(a, b, t)) *
              0.5 * (t - (-kPi + (k - 1) * dt));
      t -= (sk - target) / ellipse_speed(a, b, t);
    }
    s.x[i] = t;
    s.z[i] = std::complex<double>(a * std::cos(t), b * std::sin(t));
    std::complex<double> v(-a * std::sin(t), b * std::cos(t));
    s.tang[i] = v / std::abs(v);
  }
  finish_generic_curve(s);
  return s;
}

namespace {

double cross2(std::complex<double> o, std::complex<double> u, std::complex<double> v) {
  return (u.real() - o.real()) * (v.imag() - o.imag()) -
         (u.imag() - o.imag()) * (v.real() - o.real());
}

bool segments_cross(std::complex<double> p1, std::complex<double> p2,
                    std::complex<double> q1, std::complex<double> q2) {
  const double d1 = cross2(q1, q2, p1), d2 = cross2(q1, q2, p2);
  const double d3 = cross2(p1, p2, q1), d4 = cross2(p1, p2, q2);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

Space build_curve_polygon(const std::vector<std::complex<double>>& vertices, int n) {
  const int V = static_cast<int>(vertices.size());
  require(V >= 3, "polygon needs >= 3 vertices");
  require(n >= 8, "curve requires n >= 8");
  for (int i = 0; i < V; ++i)
    for (int j = i + 1; j < V; ++j) {
      if (j == i + 1 || (i == 0 && j == V - 1)) continue;
      require(!segments_cross(vertices[i], vertices[(i + 1) % V],
                              vertices[j], vertices[(j + 1) % V]),
              "polygon is self-intersecting");
    }

  std::vector<double> elen(V);
  double L = 0.0;
  for (int i = 0; i < V; ++i) {
    elen[i] = std::abs(vertices[(i + 1) % V] - vertices[i]);
    require(elen[i] > 0.0, "degenerate polygon edge");
    L += elen[i];
  }

  Space s;
  s.kind = SpaceKind::curve;
  s.n = n;
  s.periodic = true;
  s.id = "curve_polygon";
  s.h = L / n;
  s.x.resize(n);
  s.z.resize(n);
  s.tang.resize(n);
  s.mass.assign(n, s.h);
  int edge = 0;
  double edge_start = 0.0;
  for (int i = 0; i < n; ++i) {
    const double target = (i + 0.5) * s.h;
    while (target > edge_start + elen[edge]) {
      edge_start += elen[edge];
      edge = (edge + 1) % V;
    }
    const std::complex<double> p = vertices[edge];
    const std::complex<double> q = vertices[(edge + 1) % V];
    const std::complex<double> dir = (q - p) / elen[edge];
    s.x[i] = target;
    s.z[i] = p + dir * (target - edge_start);
    s.tang[i] = dir;
  }
  finish_generic_curve(s);
  return s;
}

Space build_cloud(std::vector<double> dist_mat, std::vector<double> masses,
                  std::optional<double> kappa_hint) {
  const int n = static_cast<int>(masses.size());
  require(n >= 1, "cloud needs >= 1 point");
  require(dist_mat.size() == static_cast<std::size_t>(n) * n,
          "distance matrix must be n*n");
  Space s;
  s.kind = SpaceKind::cloud;
  s.n = n;
  s.id = "cloud";
  s.dist_mat = std::move(dist_mat);
  s.mass = std::move(masses);
  s.total_mass = 0.0;
  for (double m : s.mass) {
    require(m > 0.0 && std::isfinite(m), "cloud masses must be positive");
    s.total_mass += m;
  }
  s.diameter = 0.0;
  s.min_sp = HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    require(s.dist_mat[static_cast<std::size_t>(i) * n + i] == 0.0,
            "cloud diagonal must be zero");
    for (int j = 0; j < n; ++j) {
      const double d = s.dist_mat[static_cast<std::size_t>(i) * n + j];
      require(d >= 0.0 && std::isfinite(d), "cloud distances must be finite and >= 0");
      require(d == s.dist_mat[static_cast<std::size_t>(j) * n + i],
              "cloud distance matrix must be symmetric");
      if (i != j) {
        require(d > 0.0, "distinct cloud points need positive distance");
        s.diameter = std::max(s.diameter, d);
        s.min_sp = std::min(s.min_sp, d);
      }
    }
  }
  if (kappa_hint) {
    s.kappa = *kappa_hint;
  } else {
    require(n <= 1024, "cloud too large for brute-force kappa; pass kappa_hint");
    double kap = 1.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double dik = s.dist_mat[static_cast<std::size_t>(i) * n + k];
        if (dik == 0.0) continue;
        for (int j = 0; j < n; ++j) {
          const double via = s.dist_mat[static_cast<std::size_t>(i) * n + j] +
                             s.dist_mat[static_cast<std::size_t>(j) * n + k];
          if (via > 0.0) kap = std::max(kap, dik / via);
        }
      }
    s.kappa = kap;
  }
  return s;
}

double integrate(const std::vector<double>& f, const Space& s) {
  if (f.size() != static_cast<std::size_t>(s.n))
    throw std::invalid_argument("grid function length must match space");
  double acc = 0.0;
  for (int i = 0; i < s.n; ++i) acc += f[i] * s.mass[i];
  return acc;
}

Space with_masses(Space s, std::vector<double> masses) {
  require(masses.size() == static_cast<std::size_t>(s.n), "mass vector length mismatch");
  for (double m : masses) require(m > 0.0 && std::isfinite(m), "masses must be positive");
  s.mass = std::move(masses);
  s.total_mass = 0.0;
  for (double m : s.mass) s.total_mass += m;
  return s;
}

namespace {

// largest integer offset with offset * h < r (strict ball on a grid)
int strict_offset(double r, double h) {
  if (r <= 0.0) return -1;
  const int m = static_cast<int>(std::ceil(r / h)) - 1;
  return std::max(m, -1);
}

}  // namespace

Ball ball(const Space& s, int center, double r) {
  if (r <= 0.0) throw std::invalid_argument("ball radius must be positive");
  Ball out;
  if (s.kind == SpaceKind::interval) {
    const int m = std::min(strict_offset(r, s.h), s.n - 1);
    const int lo = std::max(0, center - m), hi = std::min(s.n - 1, center + m);
    out.members.reserve(hi - lo + 1);
    for (int j = lo; j <= hi; ++j) {
      out.members.push_back(j);
      out.measure += s.mass[j];
    }
    return out;
  }
  if (s.kind == SpaceKind::circle) {
    const int m = strict_offset(r, s.h);
    if (2 * m + 1 >= s.n) {
      out.members.resize(s.n);
      for (int j = 0; j < s.n; ++j) {
        out.members[j] = j;
        out.measure += s.mass[j];
      }
      return out;
    }
    std::vector<int> idx;
    idx.reserve(2 * m + 1);
    for (int k = -m; k <= m; ++k) idx.push_back(((center + k) % s.n + s.n) % s.n);
    std::sort(idx.begin(), idx.end());
    out.members = std::move(idx);
    for (int j : out.members) out.measure += s.mass[j];
    return out;
  }
  for (int j = 0; j < s.n; ++j) {
    if (s.dist(center, j) < r) {
      out.members.push_back(j);
      out.measure += s.mass[j];
    }
  }
  return out;
}

double ball_measure(const Space& s, int center, double r) {
  return ball(s, center, r).measure;
}

std::vector<Tier> sorted_tiers(const Space& s, int center) {
  std::vector<Tier> tiers;
  if (s.kind == SpaceKind::interval) {
    const int mmax = std::max(center, s.n - 1 - center);
    tiers.reserve(mmax + 1);
    double cum = s.mass[center];
    tiers.push_back({0.0, s.mass[center], cum});
    for (int m = 1; m <= mmax; ++m) {
      double mass = 0.0;
      if (center - m >= 0) mass += s.mass[center - m];
      if (center + m < s.n) mass += s.mass[center + m];
      cum += mass;
      tiers.push_back({s.h * m, mass, cum});
    }
    return tiers;
  }
  if (s.kind == SpaceKind::circle) {
    const int mmax = s.n / 2;
    tiers.reserve(mmax + 1);
    double cum = s.mass[center];
    tiers.push_back({0.0, s.mass[center], cum});
    for (int m = 1; m <= mmax; ++m) {
      double mass = 0.0;
      if (m < s.n - m) {
        mass = s.mass[(center + m) % s.n] + s.mass[((center - m) % s.n + s.n) % s.n];
      } else {  // even n: single antipodal point
        mass = s.mass[(center + m) % s.n];
      }
      cum += mass;
      tiers.push_back({s.h * m, mass, cum});
    }
    return tiers;
  }
  // generic: sort distances, group ties within 1e-9 relative
  std::vector<std::pair<double, double>> dm;
  dm.reserve(s.n - 1);
  for (int j = 0; j < s.n; ++j)
    if (j != center) dm.emplace_back(s.dist(center, j), s.mass[j]);
  std::sort(dm.begin(), dm.end());
  double cum = s.mass[center];
  tiers.push_back({0.0, s.mass[center], cum});
  std::size_t i = 0;
  while (i < dm.size()) {
    const double d = dm[i].first;
    double mass = 0.0;
    std::size_t j = i;
    while (j < dm.size() && dm[j].first - d <= 1e-9 * dm[j].first) {
      mass += dm[j].second;
      ++j;
    }
    cum += mass;
    tiers.push_back({d, mass, cum});
    i = j;
  }
  return tiers;
}

double ball_measure_interp(const std::vector<Tier>& tiers, double r) {
  const std::size_t T = tiers.size();
  if (T == 1) return tiers[0].cum_mass;
  // edge nodes: e_k between tier k and k+1, carrying cum through tier k;
  // terminal edge extends the last gap beyond the top tier
  auto edge = [&](std::size_t k) {
    if (k + 1 < T) return 0.5 * (tiers[k].dist + tiers[k + 1].dist);
    return tiers[T - 1].dist + 0.5 * (tiers[T - 1].dist - tiers[T - 2].dist);
  };
  if (r <= edge(0)) return tiers[0].cum_mass;
  if (r >= edge(T - 1)) return tiers[T - 1].cum_mass;
  std::size_t lo = 0, hi = T - 1;  // edge(lo) <= r < edge(hi)
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (edge(mid) <= r) lo = mid;
    else hi = mid;
  }
  const double e0 = edge(lo), e1 = edge(hi);
  const double c0 = tiers[lo].cum_mass, c1 = tiers[hi].cum_mass;
  return c0 + (r - e0) * (c1 - c0) / (e1 - e0);
}

}  // namespace vex
