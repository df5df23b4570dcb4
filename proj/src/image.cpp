#include "eigenrec/image.hpp"

#include <cmath>
#include <string>

#include "eigenrec/error.hpp"

namespace eigenrec {

namespace {

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

struct Cursor {
  const std::uint8_t* p;
  const std::uint8_t* end;

  bool done() const { return p == end; }

  void skip_space_and_comments() {
    while (p != end) {
      if (is_pnm_space(*p)) {
        ++p;
      } else if (*p == '#') {
        while (p != end && *p != '\n') ++p;
      } else {
        break;
      }
    }
  }

  // Unsigned decimal token. what names the field for error messages.
  std::uint32_t next_uint(const char* what) {
    skip_space_and_comments();
    if (done()) throw Error(std::string("malformed header: missing ") + what);
    if (*p < '0' || *p > '9')
      throw Error(std::string("malformed header: expected number for ") + what);
    std::uint64_t value = 0;
    while (p != end && *p >= '0' && *p <= '9') {
      value = value * 10 + (*p - '0');
      if (value > 1000000000ull) throw Error(std::string("malformed header: ") + what + " too large");
      ++p;
    }
    return static_cast<std::uint32_t>(value);
  }
};

}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> bytes) {
  Cursor cur{bytes.data(), bytes.data() + bytes.size()};

  cur.skip_space_and_comments();
  if (cur.end - cur.p < 2 || cur.p[0] != 'P' || (cur.p[1] != '2' && cur.p[1] != '5'))
    throw Error("malformed header: expected P2 or P5");
  const bool binary = cur.p[1] == '5';
  cur.p += 2;
  if (!cur.done() && !is_pnm_space(*cur.p) && *cur.p != '#')
    throw Error("malformed header: expected P2 or P5");

  const std::uint32_t width = cur.next_uint("width");
  const std::uint32_t height = cur.next_uint("height");
  if (width == 0 || height == 0) throw Error("malformed header: zero image dimension");
  const std::uint32_t maxval = cur.next_uint("maxval");
  if (maxval == 0 || maxval > 65535) throw Error("maxval out of range");

  GrayImage img;
  img.width = width;
  img.height = height;
  const std::size_t count = static_cast<std::size_t>(width) * height;
  img.pixels.resize(count);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.done() || !is_pnm_space(*cur.p)) throw Error("malformed header: missing raster separator");
    ++cur.p;
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    const std::size_t need = count * sample_bytes;
    const std::size_t have = static_cast<std::size_t>(cur.end - cur.p);
    if (have != need) throw Error("pixel-count mismatch");
    for (std::size_t i = 0; i < count; ++i) {
      std::uint32_t v;
      if (sample_bytes == 2) {
        v = (static_cast<std::uint32_t>(cur.p[2 * i]) << 8) | cur.p[2 * i + 1];
      } else {
        v = cur.p[i];
      }
      if (v > maxval) throw Error("pixel value exceeds maxval");
      img.pixels[i] = static_cast<double>(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space_and_comments();
      if (cur.done()) throw Error("pixel-count mismatch");
      if (*cur.p < '0' || *cur.p > '9') throw Error("malformed pixel data");
      const std::uint32_t v = cur.next_uint("pixel");
      if (v > maxval) throw Error("pixel value exceeds maxval");
      img.pixels[i] = static_cast<double>(v);
    }
    cur.skip_space_and_comments();
    if (!cur.done()) throw Error("pixel-count mismatch");
  }
  return img;
}

namespace {

std::uint8_t export_sample(double v) {
  if (v <= 0.0) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

}  // namespace

std::vector<std::uint8_t> serialize_pgm(const GrayImage& img, PgmFormat format) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
    throw Error("dimension mismatch");

  std::string header = format == PgmFormat::P5 ? "P5\n" : "P2\n";
  header += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";

  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (format == PgmFormat::P5) {
    out.reserve(out.size() + img.pixels.size());
    for (double v : img.pixels) out.push_back(export_sample(v));
    return out;
  }

  // Plain format keeps lines short per the Netpbm convention.
  std::string body;
  std::size_t line_len = 0;
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const std::string tok = std::to_string(static_cast<unsigned>(export_sample(img.pixels[i])));
    if (line_len != 0 && line_len + 1 + tok.size() > 70) {
      body += '\n';
      line_len = 0;
    }
    if (line_len != 0) {
      body += ' ';
      ++line_len;
    }
    body += tok;
    line_len += tok.size();
  }
  body += '\n';
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

FaceVector flatten(const GrayImage& img) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height)
    throw Error("dimension mismatch");
  FaceVector vec;
  vec.width = img.width;
  vec.height = img.height;
  vec.values.resize(img.pixels.size());
  for (std::size_t c = 0; c < img.width; ++c)
    for (std::size_t r = 0; r < img.height; ++r)
      vec.values[c * img.height + r] = img.pixels[r * img.width + c];
  return vec;
}

GrayImage unflatten(const FaceVector& vec) {
  if (vec.width == 0 || vec.height == 0 || vec.values.size() != vec.width * vec.height)
    throw Error("dimension mismatch");
  GrayImage img;
  img.width = vec.width;
  img.height = vec.height;
  img.pixels.resize(vec.values.size());
  for (std::size_t c = 0; c < vec.width; ++c)
    for (std::size_t r = 0; r < vec.height; ++r)
      img.pixels[r * vec.width + c] = vec.values[c * vec.height + r];
  return img;
}

}  // namespace eigenrec
