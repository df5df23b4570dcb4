#include "eigenrec/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "eigenrec/log.hpp"

namespace eigenrec::kernels {

namespace {

const KernelTable scalar_impl = {
    scalar::dot,  scalar::axpy,          scalar::sub,   scalar::affine, scalar::sum,
    scalar::sumsq_shifted, scalar::dist2, scalar::rot,   "scalar",
};

const KernelTable& select() {
  const KernelTable* simd = simd_table();
  const char* forced = std::getenv("EIGENREC_KERNEL");
  if (forced == nullptr || std::strcmp(forced, "auto") == 0) {
    return simd != nullptr ? *simd : scalar_impl;
  }
  if (std::strcmp(forced, "scalar") == 0) return scalar_impl;
  if (simd != nullptr && std::strcmp(forced, simd->name) == 0) return *simd;
  log::warn("EIGENREC_KERNEL=", forced, " not available on this machine, using scalar");
  return scalar_impl;
}

}  // namespace

const KernelTable& scalar_table() { return scalar_impl; }

const KernelTable* simd_table() {
  if (const KernelTable* t = detail::avx2_table()) return t;
  if (const KernelTable* t = detail::neon_table()) return t;
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

const char* backend_name() { return active().name; }

}  // namespace eigenrec::kernels
