#pragma once
#include <cstddef>

namespace vex::kern {

// Dense inner loops shared by the norm, weight, and operator layers.
// Two implementations ship: a scalar reference and an AVX2 variant, selected
// once per process. Set VEX_KERNELS=scalar|avx2 to force a lane; tests use
// force() to compare both lanes on identical inputs.
//
// Reductions accumulate lane-wise and may associate differently from the
// serial order; callers that need serial-order reproducibility (none of the
// shipped ones do, since both lanes are deterministic per process) must use
// scalar_ops() directly.

struct Ops {
  const char* name;

  // sum_i w[i] * |s * x[i]|^{p[i]}; overflow propagates as +inf, never traps
  double (*sum_pow_w)(const double* x, const double* p, const double* w,
                      double s, std::size_t n);
  // out[i] = |x[i]|^{p[i]}
  void (*pow_abs_pe)(const double* x, const double* p, double* out, std::size_t n);
  // out[i] = |x[i]|^e
  void (*pow_abs_se)(const double* x, double e, double* out, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
  // sum_i |x[i]| * w[i]
  double (*sum_abs_w)(const double* x, const double* w, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  double (*max_prod)(const double* a, const double* b, std::size_t n);
  // max_i num[i]/den[i]; caller guarantees den > 0
  double (*max_ratio)(const double* num, const double* den, std::size_t n);
  // max over m in [0, m_count) of (P[i+1+m] - P[i-m]) * inv_w[m];
  // caller guarantees the index range is valid (m_count <= i+1 for the
  // backward leg and i+m_count < len(P) for the forward leg)
  double (*max_window_avg)(const double* P, std::size_t i, std::size_t m_count,
                           const double* inv_w);
  // complex reduction: out = sum_{j != skip} g[j] / (z[j] - t), parts split;
  // pass skip >= n to sum over every j
  void (*cauchy_row)(const double* zr, const double* zi,
                     const double* gr, const double* gi,
                     std::size_t n, std::size_t skip, double tr, double ti,
                     double* out_re, double* out_im);
};

const Ops& active();
const Ops& scalar_ops();
const Ops* avx2_ops();         // nullptr when the CPU or build lacks AVX2
void force(const char* name);  // "scalar" | "avx2"; throws std::invalid_argument

}  // namespace vex::kern
