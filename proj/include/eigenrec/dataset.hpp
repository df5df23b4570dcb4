#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eigenrec/image.hpp"

namespace eigenrec {

struct SubjectImage {
  FaceVector vec;
  std::string path;  // source file, for diagnostics and split bookkeeping
};

struct Subject {
  std::string id;
  std::vector<SubjectImage> images;  // natural filename order
};

// Subjects in natural id order; every image has the same dimensions.
struct Dataset {
  std::string name;  // root directory basename
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Subject> subjects;

  std::size_t total_images() const;
};

// orl: root/s<N>/<M>.pgm, subject dirs "s" plus digits, image names all
// digits. flat: every subdirectory is a subject id, images are *.pgm.
enum class Layout { Orl, Flat };

Dataset load_dataset(const std::filesystem::path& root, Layout layout);

enum class SplitStrategy { FirstK, SeededShuffle };

struct SplitSpec {
  double train_fraction = 0.8;
  SplitStrategy strategy = SplitStrategy::FirstK;
  std::uint64_t seed = 0;  // ignored by FirstK
};

struct LabeledImage {
  FaceVector vec;
  std::string subject_id;
  std::string path;
};

// Per-subject split; subject order follows the dataset, image order within
// a subject is ascending by natural filename order in both halves.
struct Split {
  std::vector<LabeledImage> train;
  std::vector<LabeledImage> test;
};

// Takes round(train_fraction * n) images of each subject for training,
// half-up. Errors unless every subject keeps at least one image on each
// side. SeededShuffle draws a permutation from a stream keyed by (seed,
// subject id); changing the stream would invalidate published splits.
Split split(const Dataset& dataset, const SplitSpec& spec);

// Digit runs compare by numeric value, other bytes ordinally:
// "s2" < "s10", "1.pgm" < "10.pgm". Equal values with fewer leading
// zeros sort first.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace eigenrec
