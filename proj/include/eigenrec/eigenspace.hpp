#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigenrec/dataset.hpp"
#include "eigenrec/image.hpp"
#include "eigenrec/linalg.hpp"

namespace eigenrec {

enum class MethodTag { Pca, Npca };

const char* method_name(MethodTag tag);
MethodTag parse_method(const std::string& name);

// Per-image intensity remapping: I = (T - mean(T)) * ustd / spread(T) + um.
// spread is the population standard deviation; rms_spread measures about
// zero instead of about the mean (the --literal-eq13 expert flag).
struct NpcaParams {
  double um = 100.0;
  double ustd = 80.0;
  bool rms_spread = false;

  bool operator==(const NpcaParams&) const = default;
};

struct Method {
  MethodTag tag = MethodTag::Pca;
  NpcaParams npca;  // meaningful only when tag == Npca

  bool operator==(const Method&) const = default;
};

struct ImageStats {
  double mean = 0.0;
  double spread = 0.0;
};

ImageStats image_stats(const FaceVector& v, bool rms_spread = false);

// Throws on constant images (zero spread).
FaceVector normalize_image(const FaceVector& v, const NpcaParams& params);

FaceVector mean_face(const std::vector<FaceVector>& faces);

// Column j = faces[j] - psi.
Matrix center(const std::vector<FaceVector>& faces, const FaceVector& psi);

// Trained eigenspace. Matrices are stored transposed so that eigenface i
// and the weight row of training image j are contiguous.
struct EigenModel {
  Method method;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> mean_face;    // D; mean of normalized inputs for npca
  std::vector<double> eigenvalues;  // k, descending, all positive
  Matrix eigenfaces_t;              // k x D, row i = unit eigenface i
  Matrix train_weights_t;           // M x k, row j = weights of image j
  std::vector<std::string> train_labels;  // M, aligned with weight rows
  double theta_c = 0.0;  // face-space radius: half the max pairwise
                         // training-weight distance
  double theta = 0.0;    // identification threshold, defaults to theta_c

  std::size_t dim() const { return mean_face.size(); }
  std::size_t components() const { return eigenvalues.size(); }
  std::size_t train_count() const { return train_labels.size(); }

  bool operator==(const EigenModel&) const = default;
};

struct TrainOptions {
  std::optional<std::size_t> components;  // keep top k (capped at available)
  std::optional<double> theta;            // override the theta_c default
  double rank_tol = kDefaultRankTol;
};

EigenModel train(const std::vector<LabeledImage>& train_set, const Method& method,
                 const TrainOptions& options = {});

// Weights of v in the model's eigenspace. npca models normalize v first.
// Training fills train_weights_t through this same code path, so a
// training image projects to its stored row bit for bit.
std::vector<double> project(const EigenModel& model, const FaceVector& v);

// mean + sum omega[i] * eigenface_i, in the model's input space (the
// normalized space for npca models).
FaceVector reconstruct(const EigenModel& model, std::span<const double> omega);

}  // namespace eigenrec
