#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenrec/dataset.hpp"
#include "eigenrec/eigenspace.hpp"

namespace eigenrec {

// One experiment: train on a split, classify its test half. A test image
// counts as correct only when it is Identified with its true subject id;
// both rejection outcomes count as errors.
struct EvalRow {
  std::string dataset;
  std::string method;
  double train_fraction = 0.0;
  std::size_t correct = 0;
  std::size_t total = 0;
  std::size_t misidentified = 0;  // identified as the wrong subject
  std::size_t unknown = 0;        // rejected by theta
  std::size_t not_a_face = 0;     // rejected by theta_c
  double accuracy_percent = 0.0;  // 100 * correct / total
  double wall_time_s = 0.0;       // zero unless timing was requested

  bool operator==(const EvalRow&) const = default;
};

struct AccuracyReport {
  std::vector<EvalRow> rows;
};

struct EvalOptions {
  SplitStrategy strategy = SplitStrategy::FirstK;
  std::uint64_t seed = 0;
  std::optional<std::size_t> components;
  unsigned jobs = 0;  // classification worker threads, 0 = all cores
  // Measured time varies run to run, which would break byte-identical
  // reruns of the report, so the column stays zero unless asked for.
  bool measure_time = false;
};

EvalRow evaluate(const Dataset& ds, const Method& method, double train_fraction,
                 const EvalOptions& options = {});

// Cartesian product of the inputs. Row order is fixed: datasets in the
// given order, then fractions descending, then methods in the given order.
// Worker count never changes the rows.
AccuracyReport run_matrix(const std::vector<Dataset>& datasets,
                          const std::vector<Method>& methods,
                          const std::vector<double>& fractions,
                          const EvalOptions& options = {});

// header: dataset,method,train_fraction,correct,total,accuracy_percent,wall_time_s
// fraction uses the shortest form ("0.8"), accuracy two decimals, time three.
std::string emit_csv(const AccuracyReport& report);

// Same fields per row plus the rejection counts, under a top-level "rows".
std::string emit_json(const AccuracyReport& report);

}  // namespace eigenrec
