#include "eigenrec/eigenspace.hpp"

#include <cmath>

#include "eigenrec/kernels.hpp"
#include "eigenrec/log.hpp"

namespace eigenrec {

namespace ker = kernels;

const char* method_name(MethodTag tag) { return tag == MethodTag::Pca ? "pca" : "npca"; }

MethodTag parse_method(const std::string& name) {
  if (name == "pca") return MethodTag::Pca;
  if (name == "npca") return MethodTag::Npca;
  throw Error("unknown method: " + name);
}

ImageStats image_stats(const FaceVector& v, bool rms_spread) {
  if (v.values.empty()) throw Error("empty image");
  const std::size_t d = v.values.size();
  ImageStats stats;
  stats.mean = ker::sum(v.values.data(), d) / static_cast<double>(d);
  const double center_at = rms_spread ? 0.0 : stats.mean;
  stats.spread =
      std::sqrt(ker::sumsq_shifted(v.values.data(), center_at, d) / static_cast<double>(d));
  return stats;
}

FaceVector normalize_image(const FaceVector& v, const NpcaParams& params) {
  const ImageStats stats = image_stats(v, params.rms_spread);
  if (stats.spread == 0.0) throw Error("cannot normalize a constant image");
  const double scale = params.ustd / stats.spread;
  FaceVector out;
  out.width = v.width;
  out.height = v.height;
  out.values.resize(v.values.size());
  ker::affine(out.values.data(), v.values.data(), scale, params.um - stats.mean * scale,
              v.values.size());
  return out;
}

namespace {

void require_uniform_dims(const std::vector<FaceVector>& faces) {
  if (faces.empty()) throw Error("no images given");
  const std::size_t w = faces.front().width, h = faces.front().height;
  if (w == 0 || h == 0 || faces.front().dim() != w * h) throw Error("dimension mismatch");
  for (const FaceVector& f : faces)
    if (f.width != w || f.height != h || f.dim() != w * h) throw Error("mixed image dimensions");
}

}  // namespace

FaceVector mean_face(const std::vector<FaceVector>& faces) {
  require_uniform_dims(faces);
  const std::size_t d = faces.front().dim();
  FaceVector psi;
  psi.width = faces.front().width;
  psi.height = faces.front().height;
  psi.values.assign(d, 0.0);
  for (const FaceVector& f : faces) ker::axpy(psi.values.data(), 1.0, f.values.data(), d);
  ker::affine(psi.values.data(), psi.values.data(), 1.0 / static_cast<double>(faces.size()), 0.0,
              d);
  return psi;
}

Matrix center(const std::vector<FaceVector>& faces, const FaceVector& psi) {
  require_uniform_dims(faces);
  const std::size_t d = faces.front().dim();
  if (psi.dim() != d) throw Error("dimension mismatch");
  Matrix rows(faces.size(), d);
  for (std::size_t j = 0; j < faces.size(); ++j)
    ker::sub(rows.row(j), faces[j].values.data(), psi.values.data(), d);
  return transpose(rows);
}

EigenModel train(const std::vector<LabeledImage>& train_set, const Method& method,
                 const TrainOptions& options) {
  if (train_set.size() < 2) throw Error("need at least two training images");
  if (options.components && *options.components == 0) throw Error("components must be positive");

  std::vector<FaceVector> inputs;
  inputs.reserve(train_set.size());
  for (const LabeledImage& li : train_set) {
    if (method.tag == MethodTag::Npca) {
      try {
        inputs.push_back(normalize_image(li.vec, method.npca));
      } catch (const Error& e) {
        throw Error(li.path.empty() ? std::string(e.what()) : li.path + ": " + e.what());
      }
    } else {
      inputs.push_back(li.vec);
    }
  }

  const FaceVector psi = mean_face(inputs);
  const Matrix a = center(inputs, psi);

  std::vector<double> values;
  Matrix u;  // d x available
  if (method.tag == MethodTag::Pca) {
    const EigenPairs lifted = lift_eigenvectors(a, sym_eig(gram(a)), options.rank_tol);
    values = lifted.values;
    u = lifted.vectors;
  } else {
    ThinSvd svd = thin_svd_via_gram(a, options.rank_tol);
    values.resize(svd.sigma.size());
    for (std::size_t i = 0; i < svd.sigma.size(); ++i) values[i] = svd.sigma[i] * svd.sigma[i];
    u = std::move(svd.u);
  }

  const std::size_t available = values.size();
  if (available == 0) throw Error("training images are all identical");
  std::size_t k = available;
  if (options.components) {
    if (*options.components < available) {
      k = *options.components;
    } else if (*options.components > available) {
      log::warn("requested ", *options.components, " components, only ", available,
                " available");
    }
  }

  EigenModel model;
  model.method = method;
  model.width = psi.width;
  model.height = psi.height;
  model.mean_face = psi.values;
  model.eigenvalues.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k));
  const std::size_t d = psi.values.size();
  model.eigenfaces_t = Matrix(k, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < d; ++r) model.eigenfaces_t.at(i, r) = u.at(r, i);
  model.train_labels.reserve(train_set.size());
  for (const LabeledImage& li : train_set) model.train_labels.push_back(li.subject_id);

  // Weights go through project() itself, which re-normalizes npca inputs:
  // a training image is guaranteed to project onto its own stored row.
  model.train_weights_t = Matrix(train_set.size(), k);
  for (std::size_t j = 0; j < train_set.size(); ++j) {
    const std::vector<double> omega = project(model, train_set[j].vec);
    for (std::size_t i = 0; i < k; ++i) model.train_weights_t.at(j, i) = omega[i];
  }

  double max_pair = 0.0;
  for (std::size_t i = 0; i < train_set.size(); ++i)
    for (std::size_t j = i + 1; j < train_set.size(); ++j)
      max_pair = std::max(
          max_pair, ker::dist2(model.train_weights_t.row(i), model.train_weights_t.row(j), k));
  model.theta_c = 0.5 * std::sqrt(max_pair);
  model.theta = options.theta.value_or(model.theta_c);

  log::info("trained ", method_name(method.tag), " model: M=", model.train_count(),
            " k=", model.components(), " theta_c=", model.theta_c);
  return model;
}

std::vector<double> project(const EigenModel& model, const FaceVector& v) {
  if (v.width != model.width || v.height != model.height || v.dim() != model.dim())
    throw Error("dimension mismatch");
  const std::size_t d = model.dim();

  const FaceVector* input = &v;
  FaceVector normalized;
  if (model.method.tag == MethodTag::Npca) {
    normalized = normalize_image(v, model.method.npca);
    input = &normalized;
  }

  std::vector<double> phi(d);
  ker::sub(phi.data(), input->values.data(), model.mean_face.data(), d);
  std::vector<double> omega(model.components());
  for (std::size_t i = 0; i < omega.size(); ++i)
    omega[i] = ker::dot(model.eigenfaces_t.row(i), phi.data(), d);
  return omega;
}

FaceVector reconstruct(const EigenModel& model, std::span<const double> omega) {
  if (omega.size() != model.components()) throw Error("dimension mismatch");
  FaceVector out;
  out.width = model.width;
  out.height = model.height;
  out.values = model.mean_face;
  for (std::size_t i = 0; i < omega.size(); ++i)
    ker::axpy(out.values.data(), omega[i], model.eigenfaces_t.row(i), model.dim());
  return out;
}

}  // namespace eigenrec
