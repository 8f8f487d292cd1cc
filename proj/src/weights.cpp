#include "vex/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace vex {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double Factor::eval(double t) const {
  switch (kind) {
    case Kind::power:
      return std::pow(t, beta);
    case Kind::powerlog:
      return std::pow(t, beta) * std::pow(1.0 + std::abs(std::log(t)), gamma);
    case Kind::tabulated:
      return table(t);
  }
  return 1.0;
}

double Factor::eval_log(double log_t) const {
  switch (kind) {
    case Kind::power:
      return beta * log_t;
    case Kind::powerlog:
      return beta * log_t + gamma * std::log1p(std::abs(log_t));
    case Kind::tabulated: {
      const double v = table(std::exp(log_t));
      require(v > 0.0 && std::isfinite(v), "tabulated factor must be positive");
      return std::log(v);
    }
  }
  return 0.0;
}

Factor power_factor(double beta) {
  require(std::isfinite(beta), "factor power must be finite");
  Factor f;
  f.kind = Factor::Kind::power;
  f.beta = beta;
  return f;
}

Factor powerlog_factor(double beta, double gamma) {
  require(std::isfinite(beta) && std::isfinite(gamma), "factor powers must be finite");
  Factor f;
  f.kind = Factor::Kind::powerlog;
  f.beta = beta;
  f.gamma = gamma;
  return f;
}

Factor tabulated_factor(std::function<double(double)> fn) {
  require(static_cast<bool>(fn), "tabulated factor needs a callable");
  Factor f;
  f.kind = Factor::Kind::tabulated;
  f.table = std::move(fn);
  return f;
}

std::vector<double> eval_weight(const WeightSpec& spec, const Space& s) {
  for (std::size_t a = 0; a < spec.anchors.size(); ++a) {
    require(spec.anchors[a].point >= 0 && spec.anchors[a].point < s.n,
            "anchor outside the space");
    for (std::size_t b = a + 1; b < spec.anchors.size(); ++b)
      require(spec.anchors[a].point != spec.anchors[b].point,
              "anchor points must be distinct");
  }
  const double eps = 0.5 * s.min_spacing();
  std::vector<double> rho(s.n, 1.0);
  for (int i = 0; i < s.n; ++i) {
    double v = 1.0;
    for (const Anchor& a : spec.anchors) {
      double d = s.dist(a.point, i);
      if (d == 0.0) d = eps;
      v *= a.factor.eval(d);
    }
    if (spec.infinity_factor)
      v *= spec.infinity_factor->eval(1.0 + s.dist(spec.infinity_center, i));
    require(v > 0.0 && std::isfinite(v), "weight evaluated non-positive or non-finite");
    rho[i] = v;
  }
  return rho;
}

WeightSpec pow_spec(const WeightSpec& spec, double c) {
  WeightSpec out = spec;
  auto raise = [c](Factor& f) {
    if (f.kind == Factor::Kind::tabulated) {
      auto base = f.table;
      f.table = [base, c](double t) { return std::pow(base(t), c); };
    } else {
      f.beta *= c;
      f.gamma *= c;
    }
  };
  for (Anchor& a : out.anchors) raise(a.factor);
  if (out.infinity_factor) raise(*out.infinity_factor);
  return out;
}

namespace {

// least squares y ~ c0 + c1 u + c2 u^2, returns c0
double quad_extrapolate(const std::vector<double>& u, const std::vector<double>& y) {
  double s[5] = {0, 0, 0, 0, 0}, t[3] = {0, 0, 0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    double up = 1.0;
    for (int k = 0; k < 5; ++k) {
      s[k] += up;
      if (k < 3) t[k] += y[i] * up;
      up *= u[i];
    }
  }
  double A[3][4] = {{s[0], s[1], s[2], t[0]},
                    {s[1], s[2], s[3], t[1]},
                    {s[2], s[3], s[4], t[2]}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || A[col][col] == 0.0) continue;
      const double fac = A[r][col] / A[col][col];
      for (int cc = col; cc < 4; ++cc) A[r][cc] -= fac * A[col][cc];
    }
  }
  return A[0][0] != 0.0 ? A[0][3] / A[0][0] : 0.0;
}

struct RawIndices {
  double m = 0.0, M = 0.0;
};

// one pass of the estimation protocol with top scale index j1
RawIndices mo_pass(const Factor& f, int j0, int j1, int t_count, bool at_infinity) {
  const double sign = at_infinity ? 1.0 : -1.0;
  RawIndices out;
  if (f.analytic()) {
    // quadratic extrapolation in u = 1/(1+|ln h|) over the deepest half
    const int j_start = j0 + (j1 - j0) / 2;
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    std::vector<double> us, gs;
    for (int i = 1; i <= t_count; ++i) {
      const double lt = 0.25 * i * kLn2;
      us.clear();
      gs.clear();
      for (int j = j_start; j <= j1; ++j) {
        const double lh = sign * j * kLn2;
        us.push_back(1.0 / (1.0 + std::abs(lh)));
        gs.push_back((f.eval_log(lh + lt) - f.eval_log(lh)) / lt);
      }
      const double limit = quad_extrapolate(us, gs);
      lo = std::min(lo, limit);
      hi = std::max(hi, limit);
    }
    out.m = lo;
    out.M = hi;
  } else {
    // raw tail protocol: deepest quarter of the h-grid, then max over t
    const int j_tail = j1 - std::max(1, (j1 - j0) / 4) + 1;
    double best_a = -HUGE_VAL, best_b = -HUGE_VAL;
    for (int i = 1; i <= t_count; ++i) {
      const double lt = 0.25 * i * kLn2;
      double gmin = HUGE_VAL, gmax = -HUGE_VAL;
      for (int j = j_tail; j <= j1; ++j) {
        const double lh = sign * j * kLn2;
        const double g = (f.eval_log(lh + lt) - f.eval_log(lh)) / lt;
        gmin = std::min(gmin, g);
        gmax = std::max(gmax, g);
      }
      best_a = std::max(best_a, gmin);
      best_b = std::max(best_b, gmax);
    }
    out.m = best_a;
    out.M = std::max(best_b, best_a);
  }
  return out;
}

WeightIndices mo_core(const Factor& f, const ScaleGridSpec& grid, bool at_infinity) {
  require(grid.j1 > grid.j0 + 8 && grid.j0 >= 1 && grid.t_count >= 4,
          "scale grid too small");
  const RawIndices deep = mo_pass(f, grid.j0, grid.j1, grid.t_count, at_infinity);
  const RawIndices shallow = mo_pass(f, grid.j0, grid.j1 - 8, grid.t_count, at_infinity);
  WeightIndices w;
  w.m = deep.m;
  w.M = deep.M;
  w.converged = std::abs(deep.m - shallow.m) < 1e-3 && std::abs(deep.M - shallow.M) < 1e-3;
  w.grid = grid;
  return w;
}

}  // namespace

WeightIndices mo_indices(const Factor& f, const ScaleGridSpec& grid) {
  return mo_core(f, grid, false);
}

WeightIndices mo_indices_infinity(const Factor& f, const ScaleGridSpec& grid) {
  return mo_core(f, grid, true);
}

ZbsReport check_zbs(const Factor& f, double delta, double ell) {
  require(delta > 0.0 && std::isfinite(delta), "delta must be positive");
  require(ell > 0.0 && std::isfinite(ell), "ell must be positive");
  const double ds = 0.05;
  const double depth = 60.0 * std::log(10.0);
  const double decade = std::log(10.0);

  ZbsReport rep;
  double c_all = 0.0, c_half = 0.0;
  for (int k = 1; k <= 16; ++k) {
    const double lh = std::log(ell) - k * kLn2;
    const double vh = std::exp(f.eval_log(lh));

    // integral of v(t)/t dt over (0, h] in log coordinates, trapezoid
    double total = 0.0, first_decade = 0.0, last_decade = 0.0;
    double prev = std::exp(f.eval_log(lh));
    const int steps = static_cast<int>(std::ceil(depth / ds));
    for (int q = 1; q <= steps; ++q) {
      const double sq = lh - q * ds;
      const double cur = std::exp(f.eval_log(sq));
      const double cell = 0.5 * (prev + cur) * ds;
      total += cell;
      if (q * ds <= decade) first_decade += cell;
      if (q * ds > depth - decade) last_decade += cell;
      prev = cur;
    }
    if (last_decade > 0.1 * first_decade) rep.diverged_at_zero = true;
    const double cA = total / vh;

    // integral of v(t)/t^{1+delta} dt over [h, ell], times h^delta / v(h)
    double ib = 0.0;
    double prev_b = std::exp(f.eval_log(lh) - delta * lh);
    const int steps_b = static_cast<int>(std::ceil((std::log(ell) - lh) / ds));
    for (int q = 1; q <= steps_b; ++q) {
      const double sq = std::min(lh + q * ds, std::log(ell));
      const double cur = std::exp(f.eval_log(sq) - delta * sq);
      const double width = sq - (lh + (q - 1) * ds);
      ib += 0.5 * (prev_b + cur) * width;
      prev_b = cur;
    }
    const double cB = ib * std::exp(delta * lh) / vh;

    const double c_here = std::max(cA, cB);
    c_all = std::max(c_all, c_here);
    if (k <= 8) c_half = std::max(c_half, c_here);
  }
  rep.c_estimate = c_all;
  const bool stable = c_half > 0.0 && c_all <= 1.25 * c_half;
  rep.integral_ok = stable && !rep.diverged_at_zero && std::isfinite(c_all);
  rep.indices = mo_indices(f);
  rep.indices_ok = rep.indices.m > 0.0 && rep.indices.M < delta;
  rep.member = rep.integral_ok && rep.indices_ok;
  return rep;
}

namespace {

struct MarginAccum {
  bool member = true;
  double margin = HUGE_VAL;
  void strict_between(double lo, double v, double hi) {
    member = member && lo < v && v < hi;
    margin = std::min({margin, v - lo, hi - v});
  }
};

double factor_beta_sum(const WeightSpec& spec) {
  double sum = spec.infinity_factor ? spec.infinity_factor->beta : 0.0;
  for (const Anchor& a : spec.anchors) sum += a.factor.beta;
  return sum;
}

double require_tail(const VariableExponent& p) {
  if (!p.tail_constant)
    throw std::invalid_argument("exponent needs a declared tail constant on unbounded models");
  return *p.tail_constant;
}

}  // namespace

ClassReport check_V_class(const WeightSpec& spec, const VariableExponent& p,
                          const DimensionBounds& dims) {
  for (const Anchor& a : spec.anchors)
    require(a.factor.kind == Factor::Kind::power, "power factors only");
  if (spec.infinity_factor)
    require(spec.infinity_factor->kind == Factor::Kind::power, "power factors only");

  MarginAccum acc;
  const double ud = dims.dim_lower;
  for (const Anchor& a : spec.anchors) {
    const double pk = p.p[a.point];
    const double pk_dual = pk / (pk - 1.0);
    acc.strict_between(-ud / pk, a.factor.beta, ud / pk_dual);
  }
  if (dims.dim_inf_lower) {
    const double pinf = require_tail(p);
    const double sum = factor_beta_sum(spec);
    acc.strict_between(-*dims.dim_inf_lower / pinf, sum,
                       *dims.dim_inf_lower - *dims.dim_inf_upper / pinf);
  }
  ClassReport rep;
  rep.member = acc.member;
  rep.margin = acc.margin;
  rep.converged = dims.converged;
  return rep;
}

ClassReport check_V_osc_class(const WeightSpec& spec, const VariableExponent& p,
                              const DimensionBounds& dims) {
  MarginAccum acc;
  bool converged = dims.converged;
  const double ud = dims.dim_lower;
  std::vector<WeightIndices> local;
  for (const Anchor& a : spec.anchors) {
    const WeightIndices idx = mo_indices(a.factor);
    converged = converged && idx.converged;
    const double pk = p.p[a.point];
    const double pk_dual = pk / (pk - 1.0);
    acc.strict_between(-ud / pk, idx.m, HUGE_VAL);
    acc.strict_between(-HUGE_VAL, idx.M, ud / pk_dual);
  }
  if (dims.dim_inf_lower) {
    const double pinf = require_tail(p);
    const double pinf_dual = pinf / (pinf - 1.0);
    double sum_m = 0.0, sum_M = 0.0;
    auto add = [&](const Factor& f) {
      const WeightIndices idx = mo_indices_infinity(f);
      converged = converged && idx.converged;
      sum_m += idx.m;
      sum_M += idx.M;
    };
    for (const Anchor& a : spec.anchors) add(a.factor);
    if (spec.infinity_factor) add(*spec.infinity_factor);
    const double gap = (*dims.dim_inf_upper - *dims.dim_inf_lower) / pinf;
    acc.strict_between(-*dims.dim_inf_lower / pinf, sum_m, HUGE_VAL);
    acc.strict_between(-HUGE_VAL, sum_M, *dims.dim_inf_lower / pinf_dual - gap);
  }
  ClassReport rep;
  rep.member = acc.member;
  rep.margin = acc.margin;
  rep.converged = converged;
  return rep;
}

namespace {

// Enumerates ball-prefix windows around every center and feeds window sums
// (mass, w, v) to the fold. Grids get O(1) prefix-array windows; generic
// spaces get sorted distance groups with 1e-9 relative tie merging.
template <typename Fold>
void sweep_windows(const Space& sp, const std::vector<double>& w,
                   const std::vector<double>& v, Fold&& fold) {
  const int n = sp.n;
  if (sp.kind == SpaceKind::interval) {
    std::vector<double> Pm(n + 1, 0.0), Pw(n + 1, 0.0), Pv(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
      Pm[i + 1] = Pm[i] + sp.mass[i];
      Pw[i + 1] = Pw[i] + w[i] * sp.mass[i];
      Pv[i + 1] = Pv[i] + v[i] * sp.mass[i];
    }
    for (int i = 0; i < n; ++i) {
      for (int m = 0;; ++m) {
        const int lo = std::max(0, i - m), hi = std::min(n - 1, i + m);
        fold(i, (m + 1) * sp.h, Pm[hi + 1] - Pm[lo], Pw[hi + 1] - Pw[lo],
             Pv[hi + 1] - Pv[lo]);
        if (lo == 0 && hi == n - 1) break;
      }
    }
    return;
  }
  if (sp.kind == SpaceKind::circle) {
    std::vector<double> Pm(2 * n + 1, 0.0), Pw(2 * n + 1, 0.0), Pv(2 * n + 1, 0.0);
    for (int i = 0; i < 2 * n; ++i) {
      const int j = i % n;
      Pm[i + 1] = Pm[i] + sp.mass[j];
      Pw[i + 1] = Pw[i] + w[j] * sp.mass[j];
      Pv[i + 1] = Pv[i] + v[j] * sp.mass[j];
    }
    const int half = n / 2;
    for (int i = 0; i < n; ++i) {
      const int c = i + half;  // recenter into the doubled arrays
      for (int m = 0; m <= half; ++m) {
        const int lo = c - m;
        // clamp to one full wrap so no point is counted twice
        const int hi = 2 * m + 1 >= n ? lo + n - 1 : c + m;
        fold(i, (m + 1) * sp.h, Pm[hi + 1] - Pm[lo], Pw[hi + 1] - Pw[lo],
             Pv[hi + 1] - Pv[lo]);
        if (2 * m + 1 >= n) break;
      }
    }
    return;
  }
  // generic: per-center sorted distances with tie groups
  std::vector<std::pair<double, int>> order(n);
  for (int c = 0; c < n; ++c) {
    for (int j = 0; j < n; ++j) order[j] = {sp.dist(c, j), j};
    std::sort(order.begin(), order.end());
    double sm = 0.0, sw = 0.0, sv = 0.0;
    int i = 0;
    while (i < n) {
      const double d = order[i].first;
      int j = i;
      while (j < n && order[j].first - d <= 1e-9 * order[j].first) {
        const int idx = order[j].second;
        sm += sp.mass[idx];
        sw += w[idx] * sp.mass[idx];
        sv += v[idx] * sp.mass[idx];
        ++j;
      }
      fold(c, d, sm, sw, sv);
      i = j;
    }
  }
}

}  // namespace

MuckenhouptReport check_muckenhoupt(const std::vector<double>& w, double s_exp,
                                    const Space& sp) {
  require(s_exp >= 1.0, "class parameter must be >= 1");
  require(w.size() == static_cast<std::size_t>(sp.n), "weight length must match space");
  for (double x : w) require(x > 0.0 && std::isfinite(x), "weight must be positive");

  MuckenhouptReport rep;
  rep.s = s_exp;
  if (s_exp > 1.0) {
    std::vector<double> v(sp.n);
    const double e = -1.0 / (s_exp - 1.0);
    for (int i = 0; i < sp.n; ++i) v[i] = std::pow(w[i], e);
    sweep_windows(sp, w, v, [&](int c, double r, double sm, double sw, double sv) {
      if (!(sm > 0.0)) return;
      const double val = (sw / sm) * std::pow(sv / sm, s_exp - 1.0);
      if (val > rep.constant) {
        rep.constant = val;
        rep.worst_center = c;
        rep.worst_radius = r;
      }
    });
  } else {
    // centered maximal of w against w itself
    std::vector<double> best(sp.n, 0.0), radius(sp.n, 0.0);
    const std::vector<double> dummy(sp.n, 0.0);
    sweep_windows(sp, w, dummy, [&](int c, double r, double sm, double sw, double) {
      if (!(sm > 0.0)) return;
      const double avg = sw / sm;
      if (avg > best[c]) {
        best[c] = avg;
        radius[c] = r;
      }
    });
    for (int i = 0; i < sp.n; ++i) {
      const double val = best[i] / w[i];
      if (val > rep.constant) {
        rep.constant = val;
        rep.worst_center = i;
        rep.worst_radius = radius[i];
      }
    }
  }
  rep.trend = {rep.constant};
  rep.holds_estimate = std::isfinite(rep.constant);
  return rep;
}

MuckenhouptReport muckenhoupt_trend(
    const std::function<std::vector<double>(const Space&)>& weight_of,
    double s_exp, const std::vector<Space>& spaces) {
  require(spaces.size() >= 2, "trend needs at least two resolutions");
  MuckenhouptReport rep;
  rep.s = s_exp;
  rep.holds_estimate = true;
  for (const Space& sp : spaces) {
    const MuckenhouptReport one = check_muckenhoupt(weight_of(sp), s_exp, sp);
    if (!rep.trend.empty() && rep.trend.back() > 0.0)
      rep.holds_estimate = rep.holds_estimate && one.constant < 1.25 * rep.trend.back();
    rep.trend.push_back(one.constant);
    rep.constant = one.constant;
    rep.worst_center = one.worst_center;
    rep.worst_radius = one.worst_radius;
  }
  return rep;
}

MuckenhouptReport theorem_erz_condition(const std::vector<double>& rho,
                                        const VariableExponent& p, const Space& sp) {
  require(!sp.truncated_unbounded, "bounded spaces only");
  require(rho.size() == static_cast<std::size_t>(sp.n), "weight length must match space");
  std::vector<double> w(sp.n);
  for (int i = 0; i < sp.n; ++i) w[i] = std::pow(rho[i], p.p[i]);
  return check_muckenhoupt(w, p.pmin, sp);
}

MuckenhouptReport remark_rem1_condition(const std::vector<double>& rho,
                                        const VariableExponent& q, double q0,
                                        const Space& sp) {
  require(q0 > 0.0 && q0 < q.pmin, "requires q0 below the exponent minimum");
  require(rho.size() == static_cast<std::size_t>(sp.n), "weight length must match space");
  std::vector<double> w(sp.n);
  for (int i = 0; i < sp.n; ++i) {
    const double q1 = q.p[i] * (q.pmax - q0) / (q.p[i] - q0);
    w[i] = std::pow(rho[i], q1);
  }
  return check_muckenhoupt(w, q.pmax / q0, sp);
}

}  // namespace vex
