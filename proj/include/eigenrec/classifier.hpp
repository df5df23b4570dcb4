#pragma once

#include <span>
#include <string>
#include <vector>

#include "eigenrec/eigenspace.hpp"

namespace eigenrec {

enum class Outcome { NotAFace, UnknownFace, Identified };

// "not_a_face" / "unknown_face" / "identified"
const char* outcome_name(Outcome outcome);

struct Decision {
  Outcome outcome = Outcome::NotAFace;
  std::string best_label;      // filled for every outcome; trust it only
                               // when outcome == Identified
  std::size_t best_index = 0;  // nearest training image
  double epsilon = 0.0;        // distance between the probe and its
                               // face-space reconstruction
  double epsilon_k = 0.0;      // distance to the nearest training weights
};

double euclidean(std::span<const double> p, std::span<const double> q);

// Three-way decision: epsilon >= theta_c means the probe is not a face;
// otherwise it is identified as the nearest training subject when that
// distance falls below theta, and unknown when it does not. Distance ties
// resolve to the lowest training index.
Decision classify(const EigenModel& model, const FaceVector& v);

struct RankedMatch {
  std::string subject;
  double distance;
};

// Ranking of distinct subjects by their best weight distance, ascending,
// truncated to n. No thresholds applied.
std::vector<RankedMatch> identify_topn(const EigenModel& model, const FaceVector& v,
                                       std::size_t n);

}  // namespace eigenrec
