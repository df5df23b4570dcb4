#include "eigenrec/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace eigenrec::kernels {
namespace {

// Lane 0 + lane 1, fixed order for reproducibility.
inline double hsum128(float64x2_t v) {
  return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1);
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  if (i + 2 <= n) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    i += 2;
  }
  double total = hsum128(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void axpy_neon(double* y, double alpha, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void sub_neon(double* dst, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void affine_neon(double* dst, const double* src, double scale, double shift, std::size_t n) {
  const float64x2_t vscale = vdupq_n_f64(scale);
  const float64x2_t vshift = vdupq_n_f64(shift);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vfmaq_f64(vshift, vld1q_f64(src + i), vscale));
  }
  for (; i < n; ++i) dst[i] = src[i] * scale + shift;
}

double sum_neon(const double* a, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(a + i + 2));
  }
  if (i + 2 <= n) {
    acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
    i += 2;
  }
  double total = hsum128(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) total += a[i];
  return total;
}

double sumsq_shifted_neon(const double* a, double shift, std::size_t n) {
  const float64x2_t vshift = vdupq_n_f64(shift);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vshift);
    float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vshift);
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  if (i + 2 <= n) {
    float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vshift);
    acc0 = vfmaq_f64(acc0, d0, d0);
    i += 2;
  }
  double total = hsum128(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - shift;
    total += d * d;
  }
  return total;
}

double dist2_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  if (i + 2 <= n) {
    float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc0 = vfmaq_f64(acc0, d0, d0);
    i += 2;
  }
  double total = hsum128(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

void rot_neon(double* x, double* y, double c, double s, std::size_t n) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vx = vld1q_f64(x + i);
    float64x2_t vy = vld1q_f64(y + i);
    vst1q_f64(x + i, vfmsq_f64(vmulq_f64(vc, vx), vs, vy));
    vst1q_f64(y + i, vfmaq_f64(vmulq_f64(vs, vx), vc, vy));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

const KernelTable table = {
    dot_neon,  axpy_neon,          sub_neon,   affine_neon, sum_neon,
    sumsq_shifted_neon, dist2_neon, rot_neon,   "neon",
};

}  // namespace

namespace detail {
const KernelTable* neon_table() { return &table; }
}  // namespace detail

}  // namespace eigenrec::kernels

#else

namespace eigenrec::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace eigenrec::kernels::detail

#endif
