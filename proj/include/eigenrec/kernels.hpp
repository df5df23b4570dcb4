#pragma once

#include <cstddef>

// Hot inner loops for the math layer. Every operation has a scalar
// reference implementation plus optional SIMD variants; one backend is
// picked at startup and used for the whole process. SIMD variants may
// reassociate reductions, so results are deterministic per backend, not
// across backends.
namespace eigenrec::kernels {

// Scalar reference implementations. SIMD variants must agree with these
// within a small relative tolerance (see tests/unit/test_kernels.cpp).
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* y, double alpha, const double* x, std::size_t n);
void sub(double* dst, const double* a, const double* b, std::size_t n);
void affine(double* dst, const double* src, double scale, double shift, std::size_t n);
double sum(const double* a, std::size_t n);
double sumsq_shifted(const double* a, double shift, std::size_t n);
double dist2(const double* a, const double* b, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
}  // namespace scalar

struct KernelTable {
  // dot(a, b) = sum a[i]*b[i]
  double (*dot)(const double*, const double*, std::size_t);
  // y += alpha * x
  void (*axpy)(double*, double, const double*, std::size_t);
  // dst = a - b
  void (*sub)(double*, const double*, const double*, std::size_t);
  // dst = src * scale + shift
  void (*affine)(double*, const double*, double, double, std::size_t);
  // sum a[i]
  double (*sum)(const double*, std::size_t);
  // sum (a[i] - shift)^2
  double (*sumsq_shifted)(const double*, double, std::size_t);
  // sum (a[i] - b[i])^2
  double (*dist2)(const double*, const double*, std::size_t);
  // plane rotation: x' = c*x - s*y, y' = s*x + c*y, applied in place
  void (*rot)(double*, double*, double, double, std::size_t);
  const char* name;
};

const KernelTable& scalar_table();

// Best SIMD table this build supports on this machine, or nullptr.
const KernelTable* simd_table();

// Backend selected at startup. EIGENREC_KERNEL=scalar|avx2|neon forces a
// specific one (falls back to scalar with a warning if unavailable);
// unset or "auto" picks simd_table() when present.
const KernelTable& active();
const char* backend_name();

inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline void axpy(double* y, double alpha, const double* x, std::size_t n) {
  active().axpy(y, alpha, x, n);
}
inline void sub(double* dst, const double* a, const double* b, std::size_t n) {
  active().sub(dst, a, b, n);
}
inline void affine(double* dst, const double* src, double scale, double shift, std::size_t n) {
  active().affine(dst, src, scale, shift, n);
}
inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }
inline double sumsq_shifted(const double* a, double shift, std::size_t n) {
  return active().sumsq_shifted(a, shift, n);
}
inline double dist2(const double* a, const double* b, std::size_t n) {
  return active().dist2(a, b, n);
}
inline void rot(double* x, double* y, double c, double s, std::size_t n) {
  active().rot(x, y, c, s, n);
}

namespace detail {
// Defined in the per-ISA translation units; nullptr when the build target
// or the running CPU lacks the instruction set.
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace eigenrec::kernels
