#include <doctest.h>

#include <string>
#include <vector>

#include "eigenrec/error.hpp"
#include "eigenrec/image.hpp"
#include "testutil.hpp"

using eigenrec::Error;
using eigenrec::FaceVector;
using eigenrec::GrayImage;
using eigenrec::PgmFormat;

namespace {

std::vector<std::uint8_t> as_bytes(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

GrayImage parse_str(const std::string& s) {
  const auto b = as_bytes(s);
  return eigenrec::parse_pgm(b);
}

}  // namespace

TEST_CASE("parses plain P2 with comments") {
  const GrayImage img = parse_str(
      "P2\n"
      "# a comment\n"
      "3 2\n"
      "# another, before maxval\n"
      "255\n"
      "0 50 100\n"
      "150 200 250\n");
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<double>{0, 50, 100, 150, 200, 250});
}

TEST_CASE("parses binary P5") {
  std::string s = "P5 3 2 255\n";
  const char raster[] = {0, 50, 100, (char)150, (char)200, (char)250};
  s.append(raster, 6);
  const GrayImage img = parse_str(s);
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.pixels == std::vector<double>{0, 50, 100, 150, 200, 250});
}

TEST_CASE("parses two-byte P5 samples big-endian") {
  std::string s = "P5\n2 1\n65535\n";
  const char raster[] = {0x01, 0x00, (char)0xff, (char)0xfe};
  s.append(raster, 4);
  const GrayImage img = parse_str(s);
  CHECK(img.pixels == std::vector<double>{256, 65534});
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_str(""), "malformed header: expected P2 or P5", Error);
  CHECK_THROWS_WITH_AS(parse_str("P3\n1 1\n255\n0\n"), "malformed header: expected P2 or P5",
                       Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n0 2\n255\n"), "malformed header: zero image dimension",
                       Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n2 2\n0\n0 0 0 0\n"), "maxval out of range", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n2 2\n70000\n0 0 0 0\n"), "maxval out of range", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n2 2\n255\n0 0 0\n"), "pixel-count mismatch", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n2 2\n255\n0 0 0 0 9\n"), "pixel-count mismatch", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n1 1\n255\n256\n"), "pixel value exceeds maxval", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n1 1\n255\nx\n"), "malformed pixel data", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n1 1\n\n"), "malformed header: missing maxval", Error);
  CHECK_THROWS_WITH_AS(parse_str("P2\n1 1\nabc\n"),
                       "malformed header: expected number for maxval", Error);

  // binary raster one byte short, and one byte long
  std::string s = "P5 2 2 255\n";
  s.append("\0\0\0", 3);
  CHECK_THROWS_WITH_AS(parse_str(s), "pixel-count mismatch", Error);
  s.append("\0\0", 2);
  CHECK_THROWS_WITH_AS(parse_str(s), "pixel-count mismatch", Error);
}

TEST_CASE("serialize clamps and rounds half-up") {
  GrayImage img;
  img.width = 5;
  img.height = 1;
  img.pixels = {-3.2, 254.5, 300.0, 127.49, 126.5};
  const auto bytes = eigenrec::serialize_pgm(img, PgmFormat::P5);
  const std::string header(bytes.begin(), bytes.begin() + 9);
  CHECK(header == "P5\n5 1\n25");  // "P5\n5 1\n255\n" prefix
  const std::size_t off = bytes.size() - 5;
  CHECK(bytes[off + 0] == 0);
  CHECK(bytes[off + 1] == 255);
  CHECK(bytes[off + 2] == 255);
  CHECK(bytes[off + 3] == 127);
  CHECK(bytes[off + 4] == 127);
}

TEST_CASE("parse inverts serialize for both formats") {
  testutil::Rng rng(0x1a6e);
  GrayImage img;
  img.width = 23;
  img.height = 17;
  img.pixels.resize(img.width * img.height);
  for (double& p : img.pixels) p = static_cast<double>(rng.uniform_index(0, 255));

  for (PgmFormat fmt : {PgmFormat::P2, PgmFormat::P5}) {
    const auto bytes = eigenrec::serialize_pgm(img, fmt);
    const GrayImage back = eigenrec::parse_pgm(bytes);
    CHECK(back == img);
  }
}

TEST_CASE("flatten is column-major") {
  GrayImage img;
  img.width = 3;
  img.height = 2;
  img.pixels = {1, 2, 3, 4, 5, 6};  // rows (1,2,3) and (4,5,6)
  const FaceVector vec = eigenrec::flatten(img);
  CHECK(vec.width == 3);
  CHECK(vec.height == 2);
  CHECK(vec.values == std::vector<double>{1, 4, 2, 5, 3, 6});
}

TEST_CASE("unflatten inverts flatten exactly") {
  testutil::Rng rng(0xf1a7);
  GrayImage img;
  img.width = 9;
  img.height = 7;
  img.pixels.resize(63);
  for (double& p : img.pixels) p = rng.uniform(-400.0, 400.0);  // fractional, out of range
  CHECK(eigenrec::unflatten(eigenrec::flatten(img)) == img);
}

TEST_CASE("unflatten validates dimensions") {
  FaceVector vec;
  vec.width = 2;
  vec.height = 2;
  vec.values = {1, 2, 3};
  CHECK_THROWS_WITH_AS(eigenrec::unflatten(vec), "dimension mismatch", Error);
}
