#include "vex/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vex::kern {

namespace {

double s_sum_pow_w(const double* x, const double* p, const double* w,
                   double s, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * std::pow(std::fabs(s * x[i]), p[i]);
  return acc;
}

void s_pow_abs_pe(const double* x, const double* p, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(std::fabs(x[i]), p[i]);
}

void s_pow_abs_se(const double* x, double e, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(std::fabs(x[i]), e);
}

double s_dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double s_dot3(const double* a, const double* b, const double* c, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] * c[i];
  return acc;
}

double s_sum_abs_w(const double* x, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]) * w[i];
  return acc;
}

double s_max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double s_max_prod(const double* a, const double* b, std::size_t n) {
  double m = -HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i] * b[i]);
  return m;
}

double s_max_ratio(const double* num, const double* den, std::size_t n) {
  double m = -HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, num[i] / den[i]);
  return m;
}

double s_max_window_avg(const double* P, std::size_t i, std::size_t m_count,
                        const double* inv_w) {
  double m = -HUGE_VAL;
  for (std::size_t k = 0; k < m_count; ++k)
    m = std::max(m, (P[i + 1 + k] - P[i - k]) * inv_w[k]);
  return m;
}

void s_cauchy_row(const double* zr, const double* zi,
                  const double* gr, const double* gi,
                  std::size_t n, std::size_t skip, double tr, double ti,
                  double* out_re, double* out_im) {
  double sr = 0.0, si = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == skip) continue;
    const double dr = zr[j] - tr, di = zi[j] - ti;
    const double inv = 1.0 / (dr * dr + di * di);
    sr += (gr[j] * dr + gi[j] * di) * inv;
    si += (gi[j] * dr - gr[j] * di) * inv;
  }
  *out_re = sr;
  *out_im = si;
}

const Ops scalar_table = {
    "scalar",       s_sum_pow_w, s_pow_abs_pe, s_pow_abs_se,
    s_dot,          s_dot3,      s_sum_abs_w,  s_max_abs,
    s_max_prod,     s_max_ratio, s_max_window_avg, s_cauchy_row,
};

const Ops* g_active = nullptr;

bool cpu_has_avx2() {
#if defined(VEX_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

#if defined(VEX_HAVE_AVX2)
const Ops* vex_avx2_table();  // defined in kernels_avx2.cpp
#endif

const Ops& scalar_ops() { return scalar_table; }

const Ops* avx2_ops() {
#if defined(VEX_HAVE_AVX2)
  if (cpu_has_avx2()) return vex_avx2_table();
#endif
  return nullptr;
}

const Ops& active() {
  if (!g_active) {
    const char* env = std::getenv("VEX_KERNELS");
    if (env) {
      force(env);
    } else if (const Ops* a = avx2_ops()) {
      g_active = a;
    } else {
      g_active = &scalar_table;
    }
  }
  return *g_active;
}

void force(const char* name) {
  const std::string want(name ? name : "");
  if (want == "scalar") {
    g_active = &scalar_table;
  } else if (want == "avx2") {
    const Ops* a = avx2_ops();
    if (!a) throw std::invalid_argument("avx2 kernels unavailable on this host");
    g_active = a;
  } else {
    throw std::invalid_argument("unknown kernel lane: " + want);
  }
}

}  // namespace vex::kern
