#include "eigenrec/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigenrec/classifier.hpp"
#include "eigenrec/dataset.hpp"
#include "eigenrec/error.hpp"
#include "eigenrec/eval.hpp"
#include "eigenrec/image.hpp"
#include "eigenrec/model_store.hpp"

namespace eigenrec {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknownFace = 2;
constexpr int kExitNotAFace = 3;

// Flags are validated before any of these touch a file.
std::vector<std::uint8_t> read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error("cannot read " + path.string());
  return bytes;
}

void write_binary(const std::filesystem::path& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.flush();
  if (!out) throw Error("cannot write " + path.string());
}

FaceVector load_probe(const std::string& path) {
  const auto bytes = read_binary(path);
  try {
    return flatten(parse_pgm(bytes));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void check_fraction(double fraction) {
  if (fraction >= 1.0) throw Error("train fraction must leave a test set");
  if (fraction <= 0.0) throw Error("train fraction must be in (0, 1)");
}

SplitStrategy parse_strategy(const std::string& name) {
  return name == "shuffle" ? SplitStrategy::SeededShuffle : SplitStrategy::FirstK;
}

Layout parse_layout(const std::string& name) {
  return name == "flat" ? Layout::Flat : Layout::Orl;
}

void print_json_line(const ordered_json& j) { std::cout << j.dump() << '\n'; }

struct TrainArgs {
  std::string dataset;
  std::string layout = "orl";
  std::string method = "pca";
  double fraction = 0.8;
  std::string strategy = "firstk";
  std::uint64_t seed = 0;
  std::optional<std::size_t> components;
  double um = 100.0;
  double ustd = 80.0;
  std::optional<double> theta;
  bool literal_eq13 = false;
  std::string out;
};

Method make_method(const std::string& name, double um, double ustd, bool literal_eq13) {
  Method m;
  m.tag = parse_method(name);
  m.npca = NpcaParams{um, ustd, literal_eq13};
  return m;
}

int cmd_train(const TrainArgs& a) {
  check_fraction(a.fraction);
  const Method method = make_method(a.method, a.um, a.ustd, a.literal_eq13);
  if (!std::isfinite(a.um)) throw Error("um must be finite");
  if (!(a.ustd > 0.0) || !std::isfinite(a.ustd)) throw Error("ustd must be positive");
  if (a.theta && !(*a.theta >= 0.0)) throw Error("theta must be nonnegative");

  const Dataset ds = load_dataset(a.dataset, parse_layout(a.layout));
  const Split sp = split(ds, {a.fraction, parse_strategy(a.strategy), a.seed});
  TrainOptions options;
  options.components = a.components;
  options.theta = a.theta;
  const EigenModel model = train(sp.train, method, options);
  save_file(model, a.out);

  print_json_line({{"M", model.train_count()},
                   {"k", model.components()},
                   {"theta_c", model.theta_c}});
  return kExitOk;
}

struct RecognizeArgs {
  std::string model;
  std::string image;
  std::size_t topn = 1;
};

int cmd_recognize(const RecognizeArgs& a) {
  if (a.topn == 0) throw Error("topn must be positive");
  const EigenModel model = load_file(a.model);
  const FaceVector probe = load_probe(a.image);

  const Decision d = classify(model, probe);
  ordered_json top = ordered_json::array();
  for (const RankedMatch& m : identify_topn(model, probe, a.topn))
    top.push_back({{"subject", m.subject}, {"distance", m.distance}});
  print_json_line({{"outcome", outcome_name(d.outcome)},
                   {"best_label", d.best_label},
                   {"epsilon", d.epsilon},
                   {"epsilon_k", d.epsilon_k},
                   {"top", std::move(top)}});

  switch (d.outcome) {
    case Outcome::Identified: return kExitOk;
    case Outcome::UnknownFace: return kExitUnknownFace;
    default: return kExitNotAFace;
  }
}

struct EvaluateArgs {
  std::vector<std::string> datasets;
  std::string layout = "orl";
  std::vector<std::string> methods = {"pca", "npca"};
  std::vector<double> fractions = {0.8, 0.6, 0.4};
  std::string strategy = "firstk";
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::string format = "csv";
  std::string out;
  bool timing = false;
};

// split-ratio label in the style of "80/20"
std::string split_label(double fraction) {
  const int train = static_cast<int>(std::lround(fraction * 100.0));
  return std::to_string(train) + "/" + std::to_string(100 - train);
}

void print_summary_table(const AccuracyReport& report, std::size_t method_count) {
  std::size_t name_width = 7;  // "dataset"
  for (const EvalRow& r : report.rows) name_width = std::max(name_width, r.dataset.size());

  char buf[64];
  std::string line;
  std::snprintf(buf, sizeof buf, "%-*s  %10s", static_cast<int>(name_width), "dataset",
                "train/test");
  line = buf;
  for (std::size_t m = 0; m < method_count; ++m) {
    std::snprintf(buf, sizeof buf, "  %8s", report.rows[m].method.c_str());
    line += buf;
  }
  std::cout << line << '\n';

  for (std::size_t i = 0; i < report.rows.size(); i += method_count) {
    std::snprintf(buf, sizeof buf, "%-*s  %10s", static_cast<int>(name_width),
                  report.rows[i].dataset.c_str(),
                  split_label(report.rows[i].train_fraction).c_str());
    line = buf;
    for (std::size_t m = 0; m < method_count; ++m) {
      std::snprintf(buf, sizeof buf, "  %8.2f", report.rows[i + m].accuracy_percent);
      line += buf;
    }
    std::cout << line << '\n';
  }
}

int cmd_evaluate(const EvaluateArgs& a) {
  if (a.datasets.empty()) throw Error("no datasets given");
  if (a.methods.empty()) throw Error("no methods given");
  if (a.fractions.empty()) throw Error("no fractions given");
  std::vector<Method> methods;
  for (const std::string& name : a.methods) methods.push_back({parse_method(name), {}});
  for (const double f : a.fractions) check_fraction(f);

  std::vector<Dataset> datasets;
  datasets.reserve(a.datasets.size());
  for (const std::string& root : a.datasets)
    datasets.push_back(load_dataset(root, parse_layout(a.layout)));

  EvalOptions options;
  options.strategy = parse_strategy(a.strategy);
  options.seed = a.seed;
  options.jobs = a.jobs;
  options.measure_time = a.timing;
  const AccuracyReport report = run_matrix(datasets, methods, a.fractions, options);

  const std::string bytes = a.format == "json" ? emit_json(report) : emit_csv(report);
  write_binary(a.out, bytes.data(), bytes.size());
  print_summary_table(report, methods.size());
  return kExitOk;
}

struct ReconstructArgs {
  std::string model;
  std::string image;
  std::string out;
};

int cmd_reconstruct(const ReconstructArgs& a) {
  const EigenModel model = load_file(a.model);
  const FaceVector probe = load_probe(a.image);

  const std::vector<double> omega = project(model, probe);
  const FaceVector recon = reconstruct(model, omega);
  // epsilon is measured in the model's input space, as in classification
  const FaceVector& reference =
      model.method.tag == MethodTag::Npca ? normalize_image(probe, model.method.npca) : probe;
  const double epsilon = euclidean(reference.values, recon.values);

  const std::vector<std::uint8_t> pgm = serialize_pgm(unflatten(recon));
  write_binary(a.out, pgm.data(), pgm.size());
  print_json_line({{"epsilon", epsilon}, {"out", a.out}});
  return kExitOk;
}

int cmd_inspect(const std::string& model_path) {
  const EigenModel m = load_file(model_path);
  print_json_line({{"method", method_name(m.method.tag)},
                   {"width", m.width},
                   {"height", m.height},
                   {"dim", m.dim()},
                   {"components", m.components()},
                   {"train_count", m.train_count()},
                   {"theta_c", m.theta_c},
                   {"theta", m.theta},
                   {"um", m.method.npca.um},
                   {"ustd", m.method.npca.ustd},
                   {"rms_spread", m.method.npca.rms_spread}});
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"eigenface trainer, recognizer, and experiment runner"};
  app.require_subcommand(1);

  const auto layout_values = CLI::IsMember({"orl", "flat"});
  const auto method_values = CLI::IsMember({"pca", "npca"});
  const auto strategy_values = CLI::IsMember({"firstk", "shuffle"});

  TrainArgs train_args;
  CLI::App* train_cmd = app.add_subcommand("train", "train a model on a dataset split");
  train_cmd->add_option("--dataset", train_args.dataset, "dataset root directory")->required();
  train_cmd->add_option("--layout", train_args.layout, "directory layout")->check(layout_values);
  train_cmd->add_option("--method", train_args.method, "training pipeline")->check(method_values);
  train_cmd->add_option("--fraction", train_args.fraction, "train fraction per subject");
  train_cmd->add_option("--strategy", train_args.strategy, "split selection")
      ->check(strategy_values);
  train_cmd->add_option("--seed", train_args.seed, "shuffle seed");
  train_cmd->add_option("--components", train_args.components, "eigenfaces to keep");
  train_cmd->add_option("--um", train_args.um, "npca target mean");
  train_cmd->add_option("--ustd", train_args.ustd, "npca target deviation");
  train_cmd->add_option("--theta", train_args.theta, "identification threshold override");
  train_cmd->add_flag("--literal-eq13", train_args.literal_eq13,
                      "measure npca spread about zero instead of about the mean");
  train_cmd->add_option("--out", train_args.out, "model file to write")->required();

  RecognizeArgs rec_args;
  CLI::App* rec_cmd = app.add_subcommand("recognize", "classify one probe image");
  rec_cmd->add_option("--model", rec_args.model, "model file")->required();
  rec_cmd->add_option("--image", rec_args.image, "probe image (pgm)")->required();
  rec_cmd->add_option("--topn", rec_args.topn, "subjects to rank");

  EvaluateArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("evaluate", "run the accuracy matrix");
  eval_cmd->add_option("--dataset", eval_args.datasets, "dataset root directories")
      ->required()
      ->delimiter(',');
  eval_cmd->add_option("--layout", eval_args.layout, "directory layout")->check(layout_values);
  eval_cmd->add_option("--methods", eval_args.methods, "pipelines to evaluate")
      ->delimiter(',')
      ->check(method_values);
  eval_cmd->add_option("--fractions", eval_args.fractions, "train fractions")->delimiter(',');
  eval_cmd->add_option("--strategy", eval_args.strategy, "split selection")
      ->check(strategy_values);
  eval_cmd->add_option("--seed", eval_args.seed, "shuffle seed");
  eval_cmd->add_option("--jobs", eval_args.jobs, "worker threads (default: all cores)");
  eval_cmd->add_option("--format", eval_args.format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  eval_cmd->add_option("--out", eval_args.out, "report file to write")->required();
  eval_cmd->add_flag("--timing", eval_args.timing,
                     "measure wall time per row (report bytes then vary run to run)");

  ReconstructArgs recon_args;
  CLI::App* recon_cmd = app.add_subcommand("reconstruct", "project and rebuild one image");
  recon_cmd->add_option("--model", recon_args.model, "model file")->required();
  recon_cmd->add_option("--image", recon_args.image, "input image (pgm)")->required();
  recon_cmd->add_option("--out", recon_args.out, "reconstruction to write (pgm)")->required();

  std::string inspect_model;
  CLI::App* inspect_cmd = app.add_subcommand("inspect", "print model header fields as json");
  inspect_cmd->add_option("--model", inspect_model, "model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(train_args);
    if (rec_cmd->parsed()) return cmd_recognize(rec_args);
    if (eval_cmd->parsed()) return cmd_evaluate(eval_args);
    if (recon_cmd->parsed()) return cmd_reconstruct(recon_args);
    if (inspect_cmd->parsed()) return cmd_inspect(inspect_model);
  } catch (const std::exception& e) {
    std::cerr << "eigenrec: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace eigenrec
