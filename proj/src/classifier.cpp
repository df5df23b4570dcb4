#include "eigenrec/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "eigenrec/kernels.hpp"

namespace eigenrec {

namespace ker = kernels;

const char* outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::NotAFace: return "not_a_face";
    case Outcome::UnknownFace: return "unknown_face";
    case Outcome::Identified: return "identified";
  }
  return "not_a_face";
}

double euclidean(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw Error("dimension mismatch");
  return std::sqrt(ker::dist2(p.data(), q.data(), p.size()));
}

namespace {

struct Projection {
  std::vector<double> omega;
  double epsilon;
};

Projection project_with_epsilon(const EigenModel& model, const FaceVector& v) {
  Projection out;
  out.omega = project(model, v);
  const FaceVector input =
      model.method.tag == MethodTag::Npca ? normalize_image(v, model.method.npca) : v;
  const FaceVector rebuilt = reconstruct(model, out.omega);
  out.epsilon =
      std::sqrt(ker::dist2(input.values.data(), rebuilt.values.data(), model.dim()));
  return out;
}

}  // namespace

Decision classify(const EigenModel& model, const FaceVector& v) {
  if (model.train_count() == 0) throw Error("model has no training images");
  const Projection proj = project_with_epsilon(model, v);
  const std::size_t k = model.components();

  Decision decision;
  decision.epsilon = proj.epsilon;
  decision.best_index = 0;
  double best = std::sqrt(ker::dist2(proj.omega.data(), model.train_weights_t.row(0), k));
  for (std::size_t j = 1; j < model.train_count(); ++j) {
    const double d = std::sqrt(ker::dist2(proj.omega.data(), model.train_weights_t.row(j), k));
    if (d < best) {  // strict: ties keep the lowest index
      best = d;
      decision.best_index = j;
    }
  }
  decision.epsilon_k = best;
  decision.best_label = model.train_labels[decision.best_index];

  if (decision.epsilon >= model.theta_c) {
    decision.outcome = Outcome::NotAFace;
  } else if (decision.epsilon_k >= model.theta) {
    decision.outcome = Outcome::UnknownFace;
  } else {
    decision.outcome = Outcome::Identified;
  }
  return decision;
}

std::vector<RankedMatch> identify_topn(const EigenModel& model, const FaceVector& v,
                                       std::size_t n) {
  if (model.train_count() == 0) throw Error("model has no training images");
  const Projection proj = project_with_epsilon(model, v);
  const std::size_t k = model.components();

  // best (distance, training index) per distinct subject
  std::vector<std::string> subjects;
  std::vector<std::pair<double, std::size_t>> best;
  for (std::size_t j = 0; j < model.train_count(); ++j) {
    const double d = std::sqrt(ker::dist2(proj.omega.data(), model.train_weights_t.row(j), k));
    const auto it = std::find(subjects.begin(), subjects.end(), model.train_labels[j]);
    if (it == subjects.end()) {
      subjects.push_back(model.train_labels[j]);
      best.emplace_back(d, j);
    } else {
      auto& slot = best[static_cast<std::size_t>(it - subjects.begin())];
      if (d < slot.first) slot = {d, j};
    }
  }

  std::vector<std::size_t> order(subjects.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&best](std::size_t a, std::size_t b) {
    if (best[a].first != best[b].first) return best[a].first < best[b].first;
    return best[a].second < best[b].second;
  });

  std::vector<RankedMatch> out;
  for (std::size_t i = 0; i < order.size() && out.size() < n; ++i)
    out.push_back({subjects[order[i]], best[order[i]].first});
  return out;
}

}  // namespace eigenrec
