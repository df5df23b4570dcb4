#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eigenrec {

// Grayscale raster, row-major, intensities as reals. Parsed images hold
// integral values in [0, maxval]; computed images (reconstructions) may
// hold anything and are clamped only on export.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;  // width * height, row-major

  bool operator==(const GrayImage&) const = default;
};

// One image flattened to a column vector, column-major:
// values[c * height + r] = pixel(r, c).
struct FaceVector {
  std::vector<double> values;
  std::size_t width = 0;
  std::size_t height = 0;

  std::size_t dim() const { return values.size(); }
  bool operator==(const FaceVector&) const = default;
};

enum class PgmFormat { P2, P5 };

// Accepts P2 (ASCII) and P5 (binary) with '#' comments in the header and,
// for P2, anywhere between samples. maxval up to 65535; two-byte P5
// samples are big-endian. Throws Error on anything malformed.
GrayImage parse_pgm(std::span<const std::uint8_t> bytes);

// 8-bit export. Values are clamped to [0, 255] and rounded half-up.
std::vector<std::uint8_t> serialize_pgm(const GrayImage& img, PgmFormat format = PgmFormat::P5);

FaceVector flatten(const GrayImage& img);

// Exact inverse of flatten, no clamping or rounding.
GrayImage unflatten(const FaceVector& vec);

}  // namespace eigenrec
