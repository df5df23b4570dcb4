#include "eigenrec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <string_view>

#include "eigenrec/error.hpp"
#include "eigenrec/log.hpp"

namespace eigenrec {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

std::string dataset_name(const std::filesystem::path& root) {
  const auto norm = std::filesystem::absolute(root).lexically_normal();
  std::string name = norm.filename().string();
  if (name.empty()) name = norm.parent_path().filename().string();
  return name;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && is_digit(a[ia])) ++ia;
      while (jb < b.size() && is_digit(b[jb])) ++jb;
      std::size_t sa = i, sb = j;
      while (sa < ia - 1 && a[sa] == '0') ++sa;
      while (sb < jb - 1 && b[sb] == '0') ++sb;
      const std::size_t la = ia - sa, lb = jb - sb;
      if (la != lb) return la < lb;
      const int cmp = a.compare(sa, la, b, sb, lb);
      if (cmp != 0) return cmp < 0;
      if (ia - i != jb - j) return ia - i < jb - j;  // fewer leading zeros first
      i = ia;
      j = jb;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

std::size_t Dataset::total_images() const {
  return std::accumulate(subjects.begin(), subjects.end(), std::size_t{0},
                         [](std::size_t acc, const Subject& s) { return acc + s.images.size(); });
}

Dataset load_dataset(const std::filesystem::path& root, Layout layout) {
  if (!std::filesystem::is_directory(root)) throw Error("dataset root not found: " + root.string());

  const bool orl = layout == Layout::Orl;
  std::vector<std::string> subject_dirs;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (orl && !(name.size() >= 2 && name[0] == 's' && all_digits(std::string_view(name).substr(1))))
      continue;
    subject_dirs.push_back(name);
  }
  if (subject_dirs.empty()) throw Error("no subject directories found in " + root.string());
  std::sort(subject_dirs.begin(), subject_dirs.end(), natural_less);

  Dataset ds;
  ds.name = dataset_name(root);
  for (const std::string& dir_name : subject_dirs) {
    const std::filesystem::path dir = root / dir_name;
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const auto& p = entry.path();
      if (p.extension() != ".pgm") continue;
      if (orl && !all_digits(p.stem().string())) continue;
      files.push_back(p.filename().string());
    }
    if (files.empty()) throw Error("empty subject directory: " + dir.string());
    std::sort(files.begin(), files.end(), natural_less);

    Subject subject;
    subject.id = dir_name;
    for (const std::string& file : files) {
      const std::filesystem::path path = dir / file;
      FaceVector vec;
      try {
        vec = flatten(parse_pgm(read_bytes(path)));
      } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
      }
      if (ds.width == 0) {
        ds.width = vec.width;
        ds.height = vec.height;
      } else if (vec.width != ds.width || vec.height != ds.height) {
        throw Error("mixed image dimensions: " + path.string());
      }
      subject.images.push_back({std::move(vec), path.string()});
    }
    ds.subjects.push_back(std::move(subject));
  }
  log::info("loaded dataset ", ds.name, ": ", ds.subjects.size(), " subjects, ",
            ds.total_images(), " images, ", ds.width, "x", ds.height);
  return ds;
}

Split split(const Dataset& dataset, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw Error("train fraction must be in (0, 1)");

  Split out;
  for (const Subject& subject : dataset.subjects) {
    const std::size_t n = subject.images.size();
    const std::size_t k =
        static_cast<std::size_t>(std::floor(spec.train_fraction * static_cast<double>(n) + 0.5));
    if (k == 0) throw Error("train fraction must leave at least one training image per subject");
    if (k >= n) throw Error("train fraction must leave a test set");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (spec.strategy == SplitStrategy::SeededShuffle) {
      std::uint64_t state = spec.seed;
      state ^= fnv1a64(subject.id) + 0x9e3779b97f4a7c15ull + (state << 6) + (state >> 2);
      for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(splitmix_next(state) % (i + 1));
        std::swap(order[i], order[j]);
      }
    }
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
    for (std::size_t pos = 0; pos < n; ++pos) {
      const SubjectImage& img = subject.images[order[pos]];
      (pos < k ? out.train : out.test).push_back({img.vec, subject.id, img.path});
    }
  }
  return out;
}

}  // namespace eigenrec
