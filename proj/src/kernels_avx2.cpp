#include "vex/kernels.hpp"

#include <cmath>
#include <immintrin.h>

// AVX2 variants of the dense loops. Compiled with -mavx2 -mfma for this TU
// only; kernels.cpp gates entry behind a runtime CPU check.

#if defined(VEX_HAVE_MVEC)
extern "C" __m256d _ZGVdN4vv_pow(__m256d x, __m256d y);  // glibc libmvec
#endif

namespace vex::kern {

namespace {

inline __m256d vabs(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline __m256d vpow(__m256d x, __m256d p) {
#if defined(VEX_HAVE_MVEC)
  return _ZGVdN4vv_pow(x, p);
#else
  alignas(32) double xs[4], ps[4], rs[4];
  _mm256_store_pd(xs, x);
  _mm256_store_pd(ps, p);
  for (int i = 0; i < 4; ++i) rs[i] = std::pow(xs[i], ps[i]);
  return _mm256_load_pd(rs);
#endif
}

double v_sum_pow_w(const double* x, const double* p, const double* w,
                   double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d base = vabs(_mm256_mul_pd(vs, _mm256_loadu_pd(x + i)));
    const __m256d pw = vpow(base, _mm256_loadu_pd(p + i));
    acc = _mm256_fmadd_pd(pw, _mm256_loadu_pd(w + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += w[i] * std::pow(std::fabs(s * x[i]), p[i]);
  return hsum(acc) + tail;
}

void v_pow_abs_pe(const double* x, const double* p, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, vpow(vabs(_mm256_loadu_pd(x + i)),
                                   _mm256_loadu_pd(p + i)));
  for (; i < n; ++i) out[i] = std::pow(std::fabs(x[i]), p[i]);
}

void v_pow_abs_se(const double* x, double e, double* out, std::size_t n) {
  const __m256d ve = _mm256_set1_pd(e);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, vpow(vabs(_mm256_loadu_pd(x + i)), ve));
  for (; i < n; ++i) out[i] = std::pow(std::fabs(x[i]), e);
}

double v_dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(acc) + tail;
}

double v_dot3(const double* a, const double* b, const double* c, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i] * c[i];
  return hsum(acc) + tail;
}

double v_sum_abs_w(const double* x, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(vabs(_mm256_loadu_pd(x + i)), _mm256_loadu_pd(w + i), acc);
  double tail = 0.0;
  for (; i < n; ++i) tail += std::fabs(x[i]) * w[i];
  return hsum(acc) + tail;
}

double v_max_abs(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, vabs(_mm256_loadu_pd(x + i)));
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double v_max_prod(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_set1_pd(-HUGE_VAL);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                           _mm256_loadu_pd(b + i)));
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, a[i] * b[i]);
  return m;
}

double v_max_ratio(const double* num, const double* den, std::size_t n) {
  __m256d acc = _mm256_set1_pd(-HUGE_VAL);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_div_pd(_mm256_loadu_pd(num + i),
                                           _mm256_loadu_pd(den + i)));
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, num[i] / den[i]);
  return m;
}

double v_max_window_avg(const double* P, std::size_t i, std::size_t m_count,
                        const double* inv_w) {
  __m256d acc = _mm256_set1_pd(-HUGE_VAL);
  std::size_t k = 0;
  // the backward leg loads P[i-k-3..i-k]; stay vectorized while k+3 <= i
  for (; k + 4 <= m_count && k + 3 <= i; k += 4) {
    const __m256d fwd = _mm256_loadu_pd(P + i + 1 + k);
    __m256d bwd = _mm256_loadu_pd(P + i - k - 3);
    bwd = _mm256_permute4x64_pd(bwd, 0x1b);  // reverse lanes
    acc = _mm256_max_pd(acc, _mm256_mul_pd(_mm256_sub_pd(fwd, bwd),
                                           _mm256_loadu_pd(inv_w + k)));
  }
  double m = hmax(acc);
  for (; k < m_count; ++k)
    m = std::max(m, (P[i + 1 + k] - P[i - k]) * inv_w[k]);
  return m;
}

void cauchy_range(const double* zr, const double* zi,
                  const double* gr, const double* gi,
                  std::size_t lo, std::size_t hi, double tr, double ti,
                  double& sr, double& si) {
  const __m256d vtr = _mm256_set1_pd(tr), vti = _mm256_set1_pd(ti);
  __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
  std::size_t j = lo;
  for (; j + 4 <= hi; j += 4) {
    const __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(zr + j), vtr);
    const __m256d di = _mm256_sub_pd(_mm256_loadu_pd(zi + j), vti);
    const __m256d den = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
    const __m256d vgr = _mm256_loadu_pd(gr + j);
    const __m256d vgi = _mm256_loadu_pd(gi + j);
    const __m256d nr = _mm256_fmadd_pd(vgr, dr, _mm256_mul_pd(vgi, di));
    const __m256d ni = _mm256_fmsub_pd(vgi, dr, _mm256_mul_pd(vgr, di));
    ar = _mm256_add_pd(ar, _mm256_div_pd(nr, den));
    ai = _mm256_add_pd(ai, _mm256_div_pd(ni, den));
  }
  double tr2 = hsum(ar), ti2 = hsum(ai);
  for (; j < hi; ++j) {
    const double dr = zr[j] - tr, di = zi[j] - ti;
    const double inv = 1.0 / (dr * dr + di * di);
    tr2 += (gr[j] * dr + gi[j] * di) * inv;
    ti2 += (gi[j] * dr - gr[j] * di) * inv;
  }
  sr += tr2;
  si += ti2;
}

void v_cauchy_row(const double* zr, const double* zi,
                  const double* gr, const double* gi,
                  std::size_t n, std::size_t skip, double tr, double ti,
                  double* out_re, double* out_im) {
  double sr = 0.0, si = 0.0;
  if (skip < n) {
    cauchy_range(zr, zi, gr, gi, 0, skip, tr, ti, sr, si);
    cauchy_range(zr, zi, gr, gi, skip + 1, n, tr, ti, sr, si);
  } else {
    cauchy_range(zr, zi, gr, gi, 0, n, tr, ti, sr, si);
  }
  *out_re = sr;
  *out_im = si;
}

const Ops avx2_table = {
    "avx2",      v_sum_pow_w, v_pow_abs_pe, v_pow_abs_se,
    v_dot,       v_dot3,      v_sum_abs_w,  v_max_abs,
    v_max_prod,  v_max_ratio, v_max_window_avg, v_cauchy_row,
};

}  // namespace

const Ops* vex_avx2_table() { return &avx2_table; }

}  // namespace vex::kern
