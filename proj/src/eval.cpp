#include "eigenrec/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <thread>

#include <json.hpp>

#include "eigenrec/classifier.hpp"
#include "eigenrec/error.hpp"

namespace eigenrec {
namespace {

enum : std::uint8_t { kCorrect, kMisidentified, kUnknown, kNotAFace };

// Static index partition; outcome tallies are order-independent, so the
// thread count cannot change the result.
void classify_all(const EigenModel& model, const std::vector<LabeledImage>& test,
                  unsigned jobs, std::vector<std::uint8_t>& kinds) {
  const std::size_t n = test.size();
  kinds.assign(n, kNotAFace);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Decision d = classify(model, test[i].vec);
      switch (d.outcome) {
        case Outcome::Identified:
          kinds[i] = d.best_label == test[i].subject_id ? kCorrect : kMisidentified;
          break;
        case Outcome::UnknownFace:
          kinds[i] = kUnknown;
          break;
        case Outcome::NotAFace:
          kinds[i] = kNotAFace;
          break;
      }
    }
  };

  unsigned threads = jobs != 0 ? jobs : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    work(0, n);
    return;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = n * t / threads;
    const std::size_t end = n * (t + 1) / threads;
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void append_formatted(std::string& out, const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  out += buf;
}

}  // namespace

EvalRow evaluate(const Dataset& ds, const Method& method, double train_fraction,
                 const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  const Split sp = split(ds, {train_fraction, options.strategy, options.seed});
  TrainOptions topts;
  topts.components = options.components;
  const EigenModel model = train(sp.train, method, topts);

  std::vector<std::uint8_t> kinds;
  classify_all(model, sp.test, options.jobs, kinds);

  EvalRow row;
  row.dataset = ds.name;
  row.method = method_name(method.tag);
  row.train_fraction = train_fraction;
  row.total = sp.test.size();
  for (const std::uint8_t kind : kinds) {
    switch (kind) {
      case kCorrect: ++row.correct; break;
      case kMisidentified: ++row.misidentified; break;
      case kUnknown: ++row.unknown; break;
      default: ++row.not_a_face; break;
    }
  }
  row.accuracy_percent = 100.0 * static_cast<double>(row.correct) /
                         static_cast<double>(row.total);
  if (options.measure_time) {
    row.wall_time_s = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

AccuracyReport run_matrix(const std::vector<Dataset>& datasets,
                          const std::vector<Method>& methods,
                          const std::vector<double>& fractions,
                          const EvalOptions& options) {
  if (datasets.empty() || methods.empty() || fractions.empty())
    throw Error("empty evaluation matrix");

  std::vector<double> ordered = fractions;
  std::stable_sort(ordered.begin(), ordered.end(), std::greater<>());

  AccuracyReport report;
  report.rows.reserve(datasets.size() * ordered.size() * methods.size());
  for (const Dataset& ds : datasets)
    for (const double fraction : ordered)
      for (const Method& method : methods)
        report.rows.push_back(evaluate(ds, method, fraction, options));
  return report;
}

std::string emit_csv(const AccuracyReport& report) {
  std::string out = "dataset,method,train_fraction,correct,total,accuracy_percent,wall_time_s\n";
  for (const EvalRow& r : report.rows) {
    out += r.dataset;
    out += ',';
    out += r.method;
    out += ',';
    append_formatted(out, "%g", r.train_fraction);
    out += ',' + std::to_string(r.correct) + ',' + std::to_string(r.total) + ',';
    append_formatted(out, "%.2f", r.accuracy_percent);
    out += ',';
    append_formatted(out, "%.3f", r.wall_time_s);
    out += '\n';
  }
  return out;
}

std::string emit_json(const AccuracyReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const EvalRow& r : report.rows) {
    rows.push_back({{"dataset", r.dataset},
                    {"method", r.method},
                    {"train_fraction", r.train_fraction},
                    {"correct", r.correct},
                    {"total", r.total},
                    {"accuracy_percent", r.accuracy_percent},
                    {"wall_time_s", r.wall_time_s},
                    {"misidentified", r.misidentified},
                    {"unknown", r.unknown},
                    {"not_a_face", r.not_a_face}});
  }
  return nlohmann::ordered_json{{"rows", std::move(rows)}}.dump(2) + "\n";
}

}  // namespace eigenrec
