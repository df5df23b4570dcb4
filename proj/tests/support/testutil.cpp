#include "testutil.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <stdexcept>

namespace testutil {

static std::atomic<unsigned> tmp_counter{0};

TmpDir::TmpDir() {
  const unsigned id = tmp_counter.fetch_add(1);
  path_ = std::filesystem::temp_directory_path() /
          ("eigenrec-test-" + std::to_string(::getpid()) + "-" + std::to_string(id));
  std::filesystem::create_directories(path_);
}

TmpDir::~TmpDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::vector<double> random_vector(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write_file failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_file failed: " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

std::string p5_bytes(std::size_t width, std::size_t height,
                     const std::vector<std::uint8_t>& pixels) {
  if (pixels.size() != width * height) throw std::runtime_error("p5_bytes: bad pixel count");
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  return out;
}

}  // namespace testutil
