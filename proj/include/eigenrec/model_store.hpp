#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "eigenrec/eigenspace.hpp"

namespace eigenrec {

// Binary model format, little-endian, fixed layout:
//
//   offset 0   magic "EIGF"
//   offset 4   u16 version (currently 1)
//   offset 6   u8  method: 0 = pca, 1 = npca
//   offset 7   u8  flags: bit 0 = spread measured about zero
//   offset 8   f64 um
//   offset 16  f64 ustd
//   offset 24  u32 width
//   offset 28  u32 height
//   offset 32  u64 dim (width * height)
//   offset 40  u64 components k
//   offset 48  u64 training image count m
//   offset 56  f64 theta_c
//   offset 64  f64 theta
//   offset 72  dim f64     mean face
//              k f64       eigenvalues, descending
//              dim*k f64   eigenfaces, one eigenface contiguous
//              k*m f64     weights, one training image contiguous
//              m times     u32 label byte length, then the label bytes
//
// The file ends exactly after the last label. Saving the same model twice
// yields identical bytes; load(save(m)) reproduces every field bit for bit.

// Returns the number of bytes written.
std::size_t save(const EigenModel& model, std::ostream& out);
void save_file(const EigenModel& model, const std::filesystem::path& path);

// Re-validates every model invariant; throws Error on any deviation.
EigenModel load(std::istream& in);
EigenModel load_file(const std::filesystem::path& path);

}  // namespace eigenrec
