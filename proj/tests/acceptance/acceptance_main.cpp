// Acceptance gate: ten checks, one [PASS]/[FAIL]/[SKIP] line each, exit 0
// only when nothing failed.
//
// argv[1]: path to the eigenrec CLI binary, used by the end-to-end
// determinism check.
//
// EIGENREC_ORL_DIR: root of a real ORL tree (s1..s40, 10 pgm files each).
// Without it the data-bound checks run on the synthetic surrogate at the
// same scale; the two checks pinned to published ORL accuracy numbers then
// report SKIP instead of pretending.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iterator>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eigenrec/classifier.hpp"
#include "eigenrec/dataset.hpp"
#include "eigenrec/eigenspace.hpp"
#include "eigenrec/error.hpp"
#include "eigenrec/eval.hpp"
#include "eigenrec/kernels.hpp"
#include "eigenrec/linalg.hpp"
#include "eigenrec/model_store.hpp"
#include "synthfaces.hpp"
#include "testutil.hpp"

using namespace eigenrec;

namespace {

// pinned tolerances
constexpr double kEigRelTol = 1e-8;         // 1: eigenvalue agreement
constexpr double kLiftResidualTol = 1e-8;   // 1: x frobenius(A At)
constexpr double kGramTrickTimeLimit = 5.0; // 1: seconds
constexpr double kSelfRecogTimeLimit = 30.0;  // 3: seconds
constexpr double kPcaTarget = 92.50;        // 4: published 80/20 accuracy
constexpr double kNpcaTarget = 93.75;       // 4
constexpr double kBandHalfWidth = 8.0;      // 4: percentage points
constexpr double kMatrixTimeLimit = 300.0;  // 4: seconds, full 6-row matrix
constexpr double kNormTol = 1e-9;           // 6: output mean and deviation
constexpr double kReconRelTol = 1e-7;       // 7: full-rank reconstruction
constexpr double kOrthoTol = 1e-9;          // 8: max |UUt - I|
constexpr double kParsevalRelTol = 1e-7;    // 8
constexpr int kRoundTrips = 50;             // 9

int g_failed = 0;
int g_skipped = 0;
bool g_emitted[11] = {};

void line(const char* status, int id, const std::string& text) {
  std::printf("[%s] %2d %s\n", status, id, text.c_str());
  std::fflush(stdout);
  g_emitted[id] = true;
}
void pass(int id, const std::string& text) { line("PASS", id, text); }
void fail(int id, const std::string& text) {
  ++g_failed;
  line("FAIL", id, text);
}
void skip(int id, const std::string& text) {
  ++g_skipped;
  line("SKIP", id, text);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

struct Context {
  std::filesystem::path cli;
  std::optional<Dataset> orl;
  Dataset data;  // orl when available, surrogate otherwise
  const char* data_label = "";
  Split split08;
  EigenModel pca08;
  EigenModel npca08;
  bool trained = false;
};

// Every criterion reports exactly once; a throw or a silent return becomes
// a FAIL for whichever of its ids is still unreported.
template <typename Fn>
void run_criterion(std::initializer_list<int> ids, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    for (int id : ids)
      if (!g_emitted[id]) fail(id, fmt("unexpected error: %s", e.what()));
  }
  for (int id : ids)
    if (!g_emitted[id]) fail(id, "criterion produced no verdict");
}

// ---- 1: reduced-dimension eigendecomposition matches the direct one ----

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  testutil::Rng rng(0x6ead71c4);
  double worst_gap = 0.0, worst_residual = 0.0;

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = rng.uniform_index(3, 8);
    const std::size_t m = rng.uniform_index(2, 5);
    Matrix a(d, m);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < m; ++j) a.at(i, j) = rng.uniform(-2.0, 2.0);

    const Matrix big = gram(transpose(a));  // A At, d x d
    const EigenPairs direct = sym_eig(big);
    const EigenPairs small = sym_eig(gram(a));
    const EigenPairs lifted = lift_eigenvectors(a, small);

    for (std::size_t i = 0; i < lifted.count(); ++i) {
      const double lambda = lifted.values[i];
      const double gap = std::abs(lambda - direct.values[i]) / lambda;
      worst_gap = std::max(worst_gap, gap);

      std::vector<double> residual(d);
      for (std::size_t r = 0; r < d; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < d; ++c) acc += big.at(r, c) * lifted.vectors.at(c, i);
        residual[r] = acc - lambda * lifted.vectors.at(r, i);
      }
      const double norm = std::sqrt(
          kernels::dot(residual.data(), residual.data(), d));
      worst_residual = std::max(worst_residual, norm / frobenius(big));
    }
  }

  const double elapsed = seconds_since(t0);
  if (worst_gap <= kEigRelTol && worst_residual <= kLiftResidualTol &&
      elapsed < kGramTrickTimeLimit) {
    pass(1, fmt("gram-trick equivalence: 200 matrices, max eigenvalue gap %.2e, "
                "max lift residual %.2e, %.2fs",
                worst_gap, worst_residual, elapsed));
  } else {
    fail(1, fmt("gram-trick equivalence: max eigenvalue gap %.2e (tol %.0e), max lift "
                "residual %.2e (tol %.0e), %.2fs (limit %.0fs)",
                worst_gap, kEigRelTol, worst_residual, kLiftResidualTol, elapsed,
                kGramTrickTimeLimit));
  }
}

// ---- 2: the worked numbers ----

void criterion2() {
  Matrix a(4, 2);
  const double av[4][2] = {{2, 3}, {-1, -2}, {-1, 1}, {0, 2}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 2; ++c) a.at(r, c) = av[r][c];
  const Matrix g = gram(a);
  const bool gram_ok = g.rows() == 2 && g.cols() == 2 && g.at(0, 0) == 6.0 &&
                       g.at(0, 1) == 7.0 && g.at(1, 0) == 7.0 && g.at(1, 1) == 18.0;

  auto face = [](std::vector<double> v) {
    FaceVector f;
    f.values = std::move(v);
    f.width = 1;
    f.height = 4;
    return f;
  };
  const std::vector<FaceVector> faces = {face({1, -2, 1, -3}), face({1, 3, -1, 2}),
                                         face({2, 1, -2, 3}), face({-8, -6, 10, -14})};
  const FaceVector psi = mean_face(faces);
  const bool mean_ok = psi.values == std::vector<double>{-1, -1, 2, -3};

  const Matrix phi = center(faces, psi);
  const bool phi_ok = phi.at(0, 0) == 2 && phi.at(1, 0) == -1 && phi.at(2, 0) == -1 &&
                      phi.at(3, 0) == 0 && phi.at(0, 1) == 2 && phi.at(1, 1) == 4 &&
                      phi.at(2, 1) == -3 && phi.at(3, 1) == 5;

  if (gram_ok && mean_ok && phi_ok)
    pass(2, "worked examples: gram [[6,7],[7,18]], mean [-1,-1,2,-3], centered "
            "differences exact");
  else
    fail(2, fmt("worked examples: gram %s, mean %s, centered %s",
                gram_ok ? "ok" : "WRONG", mean_ok ? "ok" : "WRONG",
                phi_ok ? "ok" : "WRONG"));
}

// ---- 3: every training image recognizes itself ----

void criterion3(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  ctx.split08 = split(ctx.data, {0.8, SplitStrategy::FirstK, 0});
  ctx.pca08 = train(ctx.split08.train, {MethodTag::Pca, {}});
  ctx.npca08 = train(ctx.split08.train, {MethodTag::Npca, {}});
  ctx.trained = true;

  std::size_t hits = 0, total = 0;
  for (const EigenModel* model : {&ctx.pca08, &ctx.npca08}) {
    for (const LabeledImage& img : ctx.split08.train) {
      const Decision d = classify(*model, img.vec);
      hits += d.outcome == Outcome::Identified && d.best_label == img.subject_id;
      ++total;
    }
  }
  const double elapsed = seconds_since(t0);

  if (hits == total && elapsed < kSelfRecogTimeLimit)
    pass(3, fmt("self-recognition on %s: %zu/%zu across both methods, %.1fs", ctx.data_label,
                hits, total, elapsed));
  else
    fail(3, fmt("self-recognition on %s: %zu/%zu, %.1fs (limit %.0fs)", ctx.data_label, hits,
                total, elapsed, kSelfRecogTimeLimit));
}

// ---- 4 and 5: the published accuracy table and its trend ----

const EvalRow* find_row(const AccuracyReport& report, const std::string& method,
                        double fraction) {
  for (const EvalRow& r : report.rows)
    if (r.method == method && r.train_fraction == fraction) return &r;
  return nullptr;
}

void criteria45(const Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  AccuracyReport report;
  try {
    report = run_matrix({ctx.data}, {{MethodTag::Pca, {}}, {MethodTag::Npca, {}}},
                        {0.8, 0.6, 0.4}, {});
  } catch (const std::exception& e) {
    fail(4, fmt("accuracy matrix: %s", e.what()));
    fail(5, "trend: matrix did not run");
    return;
  }
  const double elapsed = seconds_since(t0);

  const EvalRow* p8 = find_row(report, "pca", 0.8);
  const EvalRow* p4 = find_row(report, "pca", 0.4);
  const EvalRow* n8 = find_row(report, "npca", 0.8);
  const EvalRow* n4 = find_row(report, "npca", 0.4);
  if (report.rows.size() != 6 || !p8 || !p4 || !n8 || !n4) {
    fail(4, fmt("accuracy matrix: expected 6 rows with both methods at 0.8/0.6/0.4, got %zu",
                report.rows.size()));
    fail(5, "trend: matrix rows missing");
    return;
  }

  if (ctx.orl) {
    const double pca_gap = std::abs(p8->accuracy_percent - kPcaTarget);
    const double npca_gap = std::abs(n8->accuracy_percent - kNpcaTarget);
    if (pca_gap <= kBandHalfWidth && npca_gap <= kBandHalfWidth &&
        elapsed < kMatrixTimeLimit)
      pass(4, fmt("published-accuracy band on orl: pca 80/20 %.2f (target %.2f±%.0f), npca %.2f "
                  "(target %.2f±%.0f), %.0fs",
                  p8->accuracy_percent, kPcaTarget, kBandHalfWidth, n8->accuracy_percent,
                  kNpcaTarget, kBandHalfWidth, elapsed));
    else
      fail(4, fmt("published-accuracy band on orl: pca 80/20 %.2f vs %.2f±%.0f, npca %.2f vs "
                  "%.2f±%.0f, %.0fs (limit %.0fs)",
                  p8->accuracy_percent, kPcaTarget, kBandHalfWidth, n8->accuracy_percent,
                  kNpcaTarget, kBandHalfWidth, elapsed, kMatrixTimeLimit));
  } else if (elapsed < kMatrixTimeLimit) {
    skip(4, fmt("published-accuracy band needs real orl data (set EIGENREC_ORL_DIR); surrogate "
                "matrix ran 6 rows in %.0fs: pca %.2f/%.2f/%.2f, npca %.2f/%.2f/%.2f",
                elapsed, p8->accuracy_percent,
                find_row(report, "pca", 0.6)->accuracy_percent, p4->accuracy_percent,
                n8->accuracy_percent, find_row(report, "npca", 0.6)->accuracy_percent,
                n4->accuracy_percent));
  } else {
    fail(4, fmt("surrogate matrix exceeded the time limit: %.0fs (limit %.0fs)", elapsed,
                kMatrixTimeLimit));
  }

  const bool trend = p8->accuracy_percent >= p4->accuracy_percent &&
                     n8->accuracy_percent >= n4->accuracy_percent;
  const std::string detail =
      fmt("pca %.2f >= %.2f, npca %.2f >= %.2f", p8->accuracy_percent, p4->accuracy_percent,
          n8->accuracy_percent, n4->accuracy_percent);
  if (!trend)
    fail(5, fmt("trend on %s: %s", ctx.data_label, detail));
  else if (ctx.orl)
    pass(5, "trend on orl: " + detail);
  else
    skip(5, "trend pinned to orl data (set EIGENREC_ORL_DIR); holds on the surrogate: " +
                detail);
}

// ---- 6: normalization hits the target stats exactly ----

void criterion6() {
  testutil::Rng rng(0x4018a7e5);
  double worst_mean = 0.0, worst_spread = 0.0;
  for (int i = 0; i < 100; ++i) {
    FaceVector v;
    v.width = 17;
    v.height = 11;
    v.values = testutil::random_vector(rng, 17 * 11, 0.0, 255.0);
    const FaceVector out = normalize_image(v, NpcaParams{});
    const ImageStats stats = image_stats(out);
    worst_mean = std::max(worst_mean, std::abs(stats.mean - 100.0));
    worst_spread = std::max(worst_spread, std::abs(stats.spread - 80.0));
  }
  if (worst_mean <= kNormTol && worst_spread <= kNormTol)
    pass(6, fmt("normalization: 100 images, max |mean-100| %.2e, max |std-80| %.2e",
                worst_mean, worst_spread));
  else
    fail(6, fmt("normalization: max |mean-100| %.2e, max |std-80| %.2e (tol %.0e)",
                worst_mean, worst_spread, kNormTol));
}

// ---- 7: full-rank reconstruction returns the training images ----

void criterion7(const Context& ctx) {
  if (!ctx.trained) throw Error("training pipeline unavailable");
  double worst = 0.0;
  for (const EigenModel* model : {&ctx.pca08, &ctx.npca08}) {
    for (std::size_t j = 0; j < model->train_count(); ++j) {
      const FaceVector& original = ctx.split08.train[j].vec;
      const FaceVector input = model->method.tag == MethodTag::Npca
                                   ? normalize_image(original, model->method.npca)
                                   : original;
      const std::span<const double> omega(model->train_weights_t.row(j),
                                          model->components());
      const FaceVector recon = reconstruct(*model, omega);
      const double err = euclidean(input.values, recon.values);
      const double norm =
          std::sqrt(kernels::dot(input.values.data(), input.values.data(), input.dim()));
      worst = std::max(worst, err / norm);
    }
  }
  if (worst <= kReconRelTol)
    pass(7, fmt("full-rank reconstruction on %s: %zu images per method, max relative "
                "error %.2e",
                ctx.data_label, ctx.split08.train.size(), worst));
  else
    fail(7, fmt("full-rank reconstruction on %s: max relative error %.2e (tol %.0e)",
                ctx.data_label, worst, kReconRelTol));
}

// ---- 8: orthonormal basis, Parseval weights ----

double max_gram_identity_gap(const EigenModel& model) {
  const std::size_t k = model.components();
  double worst = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const double g =
          kernels::dot(model.eigenfaces_t.row(i), model.eigenfaces_t.row(j), model.dim());
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double max_parseval_gap(const EigenModel& model, const std::vector<LabeledImage>& train) {
  double worst = 0.0;
  for (std::size_t j = 0; j < model.train_count(); ++j) {
    const FaceVector input = model.method.tag == MethodTag::Npca
                                 ? normalize_image(train[j].vec, model.method.npca)
                                 : train[j].vec;
    const double phi2 =
        kernels::dist2(input.values.data(), model.mean_face.data(), model.dim());
    const double omega2 = kernels::dot(model.train_weights_t.row(j),
                                       model.train_weights_t.row(j), model.components());
    if (phi2 > 0.0) worst = std::max(worst, std::abs(phi2 - omega2) / phi2);
  }
  return worst;
}

void criterion8(const Context& ctx) {
  if (!ctx.trained) throw Error("training pipeline unavailable");
  double worst_ortho = 0.0, worst_parseval = 0.0;

  worst_ortho = std::max(max_gram_identity_gap(ctx.pca08), max_gram_identity_gap(ctx.npca08));
  worst_parseval = std::max(max_parseval_gap(ctx.pca08, ctx.split08.train),
                            max_parseval_gap(ctx.npca08, ctx.split08.train));

  // a handful of small fresh models, including a truncated one (truncation
  // keeps the basis orthonormal; Parseval needs the full rank, so it is
  // checked on the full models only)
  testutil::Rng rng(0x0a7b0);
  for (int t = 0; t < 5; ++t) {
    testutil::SynthSpec spec;
    spec.subjects = 3 + t % 3;
    spec.per_subject = 4;
    spec.width = 9 + t;
    spec.height = 11 + t;
    spec.seed = rng.next_u64();
    const Dataset ds = testutil::synth_dataset(spec);
    const Split sp = split(ds, {0.5, SplitStrategy::FirstK, 0});
    const Method method{t % 2 == 0 ? MethodTag::Pca : MethodTag::Npca, {}};

    const EigenModel full = train(sp.train, method);
    worst_ortho = std::max(worst_ortho, max_gram_identity_gap(full));
    worst_parseval = std::max(worst_parseval, max_parseval_gap(full, sp.train));

    TrainOptions truncated;
    truncated.components = 2;
    worst_ortho =
        std::max(worst_ortho, max_gram_identity_gap(train(sp.train, method, truncated)));
  }

  if (worst_ortho <= kOrthoTol && worst_parseval <= kParsevalRelTol)
    pass(8, fmt("orthonormality and parseval: max |UtU-I| %.2e, max energy gap %.2e",
                worst_ortho, worst_parseval));
  else
    fail(8, fmt("orthonormality %.2e (tol %.0e), parseval %.2e (tol %.0e)", worst_ortho,
                kOrthoTol, worst_parseval, kParsevalRelTol));
}

// ---- 9: persistence round-trips bit for bit, corruption is rejected ----

void criterion9() {
  testutil::Rng rng(0x9e441ca7);
  int round_trips = 0;
  std::string sample;
  for (int t = 0; t < kRoundTrips; ++t) {
    testutil::SynthSpec spec;
    spec.subjects = 2 + t % 4;
    spec.per_subject = 3 + t % 3;
    spec.width = 5 + t % 5;
    spec.height = 6 + t % 4;
    spec.seed = rng.next_u64();
    const Dataset ds = testutil::synth_dataset(spec);
    const Split sp = split(ds, {0.6, SplitStrategy::FirstK, 0});
    Method method{t % 2 == 0 ? MethodTag::Pca : MethodTag::Npca,
                  NpcaParams{90.0 + t, 60.0 + t % 30, t % 4 == 1}};
    TrainOptions options;
    if (t % 3 == 0) options.components = 2;

    const EigenModel model = train(sp.train, method, options);
    std::ostringstream out(std::ios::binary);
    save(model, out);
    const std::string bytes = out.str();
    std::istringstream in(bytes, std::ios::binary);
    const EigenModel back = load(in);

    std::ostringstream again(std::ios::binary);
    save(back, again);
    if (back == model && again.str() == bytes) ++round_trips;
    if (t == 0) sample = bytes;
  }

  const std::pair<std::string, std::string> corpus[] = {
      {"magic", "bad magic"},
      {"version", "unsupported model version"},
      {"method", "corrupt model: bad method"},
      {"header-cut", "truncated payload"},
      {"payload-cut", "truncated payload"},
      {"empty", "truncated payload"},
      {"trailing", "file size mismatch"},
  };
  int rejected = 0;
  for (const auto& [kind, expected] : corpus) {
    std::string bad = sample;
    if (kind == "magic") bad[0] = 'Z';
    else if (kind == "version") bad[4] = 9;
    else if (kind == "method") bad[6] = 5;
    else if (kind == "header-cut") bad.resize(40);
    else if (kind == "payload-cut") bad.resize(bad.size() - 3);
    else if (kind == "empty") bad.clear();
    else bad += '\0';
    try {
      std::istringstream in(bad, std::ios::binary);
      load(in);
    } catch (const Error& e) {
      rejected += expected == e.what();
    }
  }

  const int corpus_size = static_cast<int>(std::size(corpus));
  if (round_trips == kRoundTrips && rejected == corpus_size)
    pass(9, fmt("persistence: %d/%d round-trips bit-identical, %d/%d malformed files "
                "rejected with the exact errors",
                round_trips, kRoundTrips, rejected, corpus_size));
  else
    fail(9, fmt("persistence: %d/%d round-trips, %d/%d malformed rejections", round_trips,
                kRoundTrips, rejected, corpus_size));
}

// ---- 10: the shipped binary is deterministic end to end ----

void criterion10(const Context& ctx) {
  testutil::TmpDir tmp;
  testutil::SynthSpec spec;
  spec.subjects = 20;
  testutil::write_synth_dataset(tmp.path() / "faces", spec);

  auto run = [&](const std::string& name, const std::string& extra) -> std::string {
    const auto out = tmp.path() / (name + ".csv");
    const std::string cmd = "'" + ctx.cli.string() + "' evaluate --dataset '" +
                            (tmp.path() / "faces").string() + "' " + extra + " --out '" +
                            out.string() + "' > '" +
                            (tmp.path() / (name + ".log")).string() + "' 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) throw Error(fmt("evaluate run '%s' exited with status %d", name.c_str(), rc));
    return testutil::read_file(out);
  };

  const std::string a = run("a", "--jobs 2");
  const std::string b = run("b", "--jobs 2");
  const std::string j1 = run("j1", "--jobs 1");
  const std::string j8 = run("j8", "--jobs 8");

  const bool header_ok =
      a.rfind("dataset,method,train_fraction,correct,total,accuracy_percent,wall_time_s\n",
              0) == 0;
  if (a == b && j1 == j8 && a == j1 && header_ok && !a.empty())
    pass(10, fmt("end-to-end determinism: four evaluate runs (repeat, jobs 1, jobs 8) "
                 "produced byte-identical %zu-byte reports",
                 a.size()));
  else
    fail(10, fmt("end-to-end determinism: repeat %s, jobs1-vs-8 %s, header %s",
                 a == b ? "identical" : "DIFFERS", j1 == j8 ? "identical" : "DIFFERS",
                 header_ok ? "ok" : "WRONG"));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-eigenrec-binary>\n", argv[0]);
    return 2;
  }

  Context ctx;
  ctx.cli = argv[1];

  const char* orl_dir = std::getenv("EIGENREC_ORL_DIR");
  if (orl_dir && *orl_dir) {
    try {
      ctx.orl = load_dataset(orl_dir, Layout::Orl);
      std::printf("data: orl at %s (%zu subjects, %zu images)\n", orl_dir,
                  ctx.orl->subjects.size(), ctx.orl->total_images());
    } catch (const std::exception& e) {
      std::printf("data: EIGENREC_ORL_DIR set but unusable (%s); using the surrogate\n",
                  e.what());
    }
  }
  if (ctx.orl) {
    ctx.data = *ctx.orl;
    ctx.data_label = "orl";
  } else {
    ctx.data = testutil::synth_dataset({});
    ctx.data_label = "surrogate (40x10 at 92x112)";
    if (!orl_dir || !*orl_dir)
      std::printf("data: synthetic surrogate, 40 subjects x 10 images at 92x112 "
                  "(set EIGENREC_ORL_DIR for the real thing)\n");
  }

  run_criterion({1}, [] { criterion1(); });
  run_criterion({2}, [] { criterion2(); });
  run_criterion({3}, [&] { criterion3(ctx); });
  run_criterion({4, 5}, [&] { criteria45(ctx); });
  run_criterion({6}, [] { criterion6(); });
  run_criterion({7}, [&] { criterion7(ctx); });
  run_criterion({8}, [&] { criterion8(ctx); });
  run_criterion({9}, [] { criterion9(); });
  run_criterion({10}, [&] { criterion10(ctx); });

  std::printf("criteria: %d passed, %d skipped, %d failed\n", 10 - g_failed - g_skipped,
              g_skipped, g_failed);
  return g_failed == 0 ? 0 : 1;
}
