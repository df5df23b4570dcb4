#include "eigenrec/model_store.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "eigenrec/kernels.hpp"

namespace eigenrec {

namespace {

constexpr std::uint16_t kVersion = 1;
constexpr std::size_t kHeaderSize = 72;
constexpr std::uint64_t kMaxExtent = 1ull << 32;  // caps corrupt-size allocations

void put_u16(std::string& b, std::uint16_t v) {
  b.push_back(static_cast<char>(v & 0xff));
  b.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& b, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& b, double v) { put_u64(b, std::bit_cast<std::uint64_t>(v)); }

struct Reader {
  const std::string& buf;
  std::size_t pos = 0;

  void need(std::size_t n) const {
    if (buf.size() - pos < n) throw Error("truncated payload");
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(buf[pos++]);
  }
  std::uint16_t u16() {
    need(2);
    std::uint16_t v = 0;
    for (int i = 0; i < 2; ++i) v |= static_cast<std::uint16_t>(static_cast<std::uint8_t>(buf[pos++])) << (8 * i);
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf[pos++])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[pos++])) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
};

void check_consistent(const EigenModel& m) {
  const std::size_t d = m.dim();
  const std::size_t k = m.components();
  const bool ok = m.width >= 1 && m.height >= 1 && d == m.width * m.height && k >= 1 &&
                  m.train_count() >= 1 && m.eigenvalues.size() == k &&
                  m.eigenfaces_t.rows() == k && m.eigenfaces_t.cols() == d &&
                  m.train_weights_t.rows() == m.train_count() && m.train_weights_t.cols() == k;
  if (!ok) throw Error("model is inconsistent");
}

void validate_invariants(const EigenModel& m) {
  check_consistent(m);

  for (std::size_t i = 0; i < m.components(); ++i) {
    const double v = m.eigenvalues[i];
    if (!std::isfinite(v) || v <= 0.0 || (i > 0 && m.eigenvalues[i - 1] < v))
      throw Error("corrupt model: bad eigenvalues");
  }
  if (!std::isfinite(m.theta_c) || m.theta_c < 0.0 || !std::isfinite(m.theta) || m.theta < 0.0)
    throw Error("corrupt model: bad threshold");
  if (!std::isfinite(m.method.npca.um) || !std::isfinite(m.method.npca.ustd) ||
      (m.method.tag == MethodTag::Npca && m.method.npca.ustd <= 0.0))
    throw Error("corrupt model: bad normalization parameters");

  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < m.components(); ++i) {
    for (std::size_t j = i; j < m.components(); ++j) {
      const double dot =
          kernels::dot(m.eigenfaces_t.row(i), m.eigenfaces_t.row(j), d);
      if (std::fabs(dot - (i == j ? 1.0 : 0.0)) > 1e-9)
        throw Error("corrupt model: eigenfaces not orthonormal");
    }
  }
}

}  // namespace

std::size_t save(const EigenModel& model, std::ostream& out) {
  check_consistent(model);

  std::string b;
  const std::uint64_t d = model.dim();
  const std::uint64_t k = model.components();
  const std::uint64_t m = model.train_count();
  b.reserve(kHeaderSize + 8 * (d + k + d * k + k * m));

  b += "EIGF";
  put_u16(b, kVersion);
  b.push_back(model.method.tag == MethodTag::Npca ? 1 : 0);
  b.push_back(model.method.npca.rms_spread ? 1 : 0);
  put_f64(b, model.method.npca.um);
  put_f64(b, model.method.npca.ustd);
  put_u32(b, static_cast<std::uint32_t>(model.width));
  put_u32(b, static_cast<std::uint32_t>(model.height));
  put_u64(b, d);
  put_u64(b, k);
  put_u64(b, m);
  put_f64(b, model.theta_c);
  put_f64(b, model.theta);

  for (double v : model.mean_face) put_f64(b, v);
  for (double v : model.eigenvalues) put_f64(b, v);
  const double* faces = model.eigenfaces_t.data();
  for (std::uint64_t i = 0; i < d * k; ++i) put_f64(b, faces[i]);
  const double* weights = model.train_weights_t.data();
  for (std::uint64_t i = 0; i < k * m; ++i) put_f64(b, weights[i]);
  for (const std::string& label : model.train_labels) {
    put_u32(b, static_cast<std::uint32_t>(label.size()));
    b += label;
  }

  out.write(b.data(), static_cast<std::streamsize>(b.size()));
  if (!out) throw Error("write failed");
  return b.size();
}

void save_file(const EigenModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  save(model, out);
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

EigenModel load(std::istream& in) {
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Reader r{buf};

  r.need(4);
  if (buf.compare(0, 4, "EIGF") != 0) throw Error("bad magic");
  r.pos = 4;
  if (r.u16() != kVersion) throw Error("unsupported model version");

  EigenModel model;
  const std::uint8_t method = r.u8();
  if (method > 1) throw Error("corrupt model: bad method");
  model.method.tag = method == 1 ? MethodTag::Npca : MethodTag::Pca;
  const std::uint8_t flags = r.u8();
  if (flags > 1) throw Error("corrupt model: bad flags");
  model.method.npca.rms_spread = flags & 1;
  model.method.npca.um = r.f64();
  model.method.npca.ustd = r.f64();
  model.width = r.u32();
  model.height = r.u32();
  const std::uint64_t d = r.u64();
  const std::uint64_t k = r.u64();
  const std::uint64_t m = r.u64();
  model.theta_c = r.f64();
  model.theta = r.f64();

  if (d == 0 || k == 0 || m == 0 || d >= kMaxExtent || k >= kMaxExtent || m >= kMaxExtent ||
      model.width == 0 || model.height == 0 ||
      d != static_cast<std::uint64_t>(model.width) * model.height ||
      d * k >= (1ull << 40) || k * m >= (1ull << 40))
    throw Error("corrupt model: bad dimensions");
  // every fixed-size field must fit before any allocation happens
  r.need(8 * (d + k + d * k + k * m) + 4 * m);

  model.mean_face.resize(d);
  for (double& v : model.mean_face) v = r.f64();
  model.eigenvalues.resize(k);
  for (double& v : model.eigenvalues) v = r.f64();
  model.eigenfaces_t = Matrix(k, d);
  for (std::uint64_t i = 0; i < d * k; ++i) model.eigenfaces_t.data()[i] = r.f64();
  model.train_weights_t = Matrix(m, k);
  for (std::uint64_t i = 0; i < k * m; ++i) model.train_weights_t.data()[i] = r.f64();
  model.train_labels.resize(m);
  for (std::string& label : model.train_labels) {
    const std::uint32_t len = r.u32();
    r.need(len);
    label.assign(buf, r.pos, len);
    r.pos += len;
  }
  if (r.pos != buf.size()) throw Error("file size mismatch");

  validate_invariants(model);
  return model;
}

EigenModel load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return load(in);
}

}  // namespace eigenrec
