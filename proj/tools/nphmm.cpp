// nphmm: command-line front end.
//
// Exit codes: 0 success, 1 assumption or acceptance violation, 2 usage error,
// 3 numerical failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nphmm/basis.hpp"
#include "nphmm/contrast.hpp"
#include "nphmm/error.hpp"
#include "nphmm/evaluation.hpp"
#include "nphmm/hd_assumption.hpp"
#include "nphmm/hmm_model.hpp"
#include "nphmm/io.hpp"
#include "nphmm/moments.hpp"
#include "nphmm/parallel.hpp"
#include "nphmm/rng.hpp"
#include "nphmm/selection.hpp"
#include "nphmm/spectral.hpp"

using namespace nphmm;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::DomainError:
    case ErrorKind::IoError:
      return kUsage;
    default:
      return kNumerical;
  }
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::optional<std::string>& out, const std::string& text) {
  if (out)
    write_file_atomic(*out, text);
  else
    std::cout << text;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Options shared by commands that take a model: a JSON config file whose
// fields the flags override.
struct ModelOptions {
  std::optional<std::string> config;
  std::optional<std::string> model;

  void add(CLI::App* cmd) {
    cmd->add_option("--config", config, "JSON config file; flags override its fields")->check(CLI::ExistingFile);
    cmd->add_option("--model", model, "HMM spec JSON file (overrides the config's \"model\")")->check(CLI::ExistingFile);
  }

  json resolved() const { return config ? load_json(*config) : json::object(); }

  // The model is either inline or a path relative to the config file.
  static HMMSpec spec(json& cfg, const std::optional<std::string>& config_path) {
    if (!cfg.contains("model")) throw UsageError("missing config field \"model\" (or --model)");
    json& m = cfg["model"];
    if (m.is_string()) {
      fs::path p = m.get<std::string>();
      if (p.is_relative() && config_path && !fs::exists(p)) p = fs::path(*config_path).parent_path() / p;
      m = load_json(p.string());
    }
    return spec_from_json(m);
  }
};

// Pipeline fields that may appear in a config next to the CLI-only ones.
json pipeline_fields(const json& cfg) {
  json j = json::object();
  for (const auto& [k, v] : cfg.items())
    if (k != "model" && k != "output" && k != "replicates" && k != "threads" && k != "samples") j[k] = v;
  return j;
}

// ---------------------------------------------------------------- simulate

struct SimulateCmd {
  ModelOptions model;
  std::optional<long> N;
  std::optional<std::string> scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> states;
  std::string out = "samples.csv";

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("simulate", "Draw observation triples from a model");
    model.add(c);
    c->add_option("-N,--N", N, "number of triples");
    c->add_option("--scenario", scenario, "A (independent triples) or B (one chain)");
    c->add_option("--seed", seed);
    c->add_option("--states", states, "also write the hidden states (one per line)");
    c->add_option("-o,--out", out, "output CSV");
    c->callback([this] { run(); });
  }

  void run() {
    json cfg = model.resolved();
    if (model.model) cfg["model"] = *model.model;
    if (N) cfg["N"] = *N;
    if (scenario) cfg["scenario"] = *scenario;
    if (seed) cfg["seed"] = *seed;
    const HMMSpec spec = ModelOptions::spec(cfg, model.config);
    const PipelineConfig pc = pipeline_config_from_json(pipeline_fields(cfg));
    std::vector<int> hidden;
    const Samples s = sample_chain(spec, pc.N, pc.scenario, pc.seed, states ? &hidden : nullptr);
    write_file_atomic(out, samples_to_csv(s));
    if (states) {
      std::ostringstream os;
      for (int k : hidden) os << k << '\n';
      write_file_atomic(*states, os.str());
    }
  }
};

// ----------------------------------------------------------------- moments

struct MomentSource {
  std::optional<std::string> samples;
  std::optional<std::string> moments;
  std::string basis = "histogram";
  int M = 0;
  std::optional<std::string> cache;
  bool cache_hit = false;

  void add(CLI::App* c, bool allow_moments_file) {
    c->add_option("--samples", samples, "samples CSV")->check(CLI::ExistingFile);
    if (allow_moments_file) c->add_option("--moments", moments, "moment file from `nphmm moments`")->check(CLI::ExistingFile);
    c->add_option("--basis", basis, "histogram or trigonometric");
    c->add_option("-M,--M", M, "basis dimension");
    c->add_option("--cache", cache, "directory of cached moment files keyed by (data hash, basis, M)");
  }

  MomentSet load() {
    if (moments) return read_moments(*moments);
    if (!samples) throw UsageError("need --samples (or --moments)");
    if (M < 1) throw UsageError("need --M >= 1");
    const BasisFamily b{basis_kind_from_string(basis), M};
    const std::string text = read_file(*samples);
    std::string cached;
    if (cache) {
      std::ostringstream key;
      key << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text) << '-' << to_string(b.kind) << '-' << std::dec
          << M << ".bin";
      cached = (fs::path(*cache) / key.str()).string();
      if (fs::exists(cached)) {
        cache_hit = true;
        return read_moments(cached);
      }
    }
    const MomentSet m = empirical_moments(samples_from_csv(text), b);
    if (cache) {
      fs::create_directories(*cache);
      write_moments(m, cached);
    }
    return m;
  }
};

struct MomentsCmd {
  MomentSource src;
  std::optional<std::string> out;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("moments", "Empirical moments L, N, P, T of a sample file");
    src.add(c, false);
    c->add_option("-o,--out", out, "binary moment file");
    c->callback([this] { run(); });
  }

  void run() {
    const MomentSet m = src.load();
    if (out) write_moments(m, *out);
    std::cout << json({{"M", m.M}, {"n_samples", m.n_samples}, {"cache", src.cache ? (src.cache_hit ? "hit" : "miss") : "off"}})
                     .dump()
              << '\n';
  }
};

// ---------------------------------------------------------------- spectral

struct SpectralCmd {
  MomentSource src;
  int K = 0;
  std::uint64_t seed = 1;
  std::optional<std::string> out;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("spectral", "Method-of-moments estimate of (O, Q, pi)");
    src.add(c, true);
    c->add_option("-K,--K", K, "number of hidden states")->required();
    c->add_option("--seed", seed, "seed of the random rotation");
    c->add_option("-o,--out", out, "output JSON (default stdout)");
    c->callback([this] { run(); });
  }

  void run() {
    const MomentSet m = src.load();
    SpectralEstimate est;
    try {
      est = spectral_estimate(m, K, seed);
    } catch (const Error& e) {
      throw Error(e.kind(), std::string("spectral: ") + e.what());
    }
    json j = to_json(est);
    j["M"] = m.M;
    j["K"] = K;
    j["seed"] = seed;
    emit(out, j.dump(2) + "\n");
  }
};

// --------------------------------------------------------------------- fit

struct FitCmd {
  ModelOptions model;
  std::optional<long> N;
  std::optional<std::string> scenario, basis, calibration, samples, out;
  std::optional<int> M_min, M_max, replicates;
  std::optional<double> rho;
  std::optional<long> max_evals;
  std::optional<std::uint64_t> seed;
  bool no_ls = false;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("fit", "Full pipeline: spectral start, least squares, calibration, selection");
    model.add(c);
    c->add_option("-N,--N", N, "sample size");
    c->add_option("--scenario", scenario, "A or B");
    c->add_option("--basis", basis, "histogram or trigonometric");
    c->add_option("--M-min", M_min);
    c->add_option("--M-max", M_max);
    c->add_option("--calibration", calibration, "jump or slope");
    c->add_option("--rho", rho, "fixed penalty constant (no calibration)");
    c->add_option("--max-evals", max_evals, "optimizer budget per M");
    c->add_option("--seed", seed);
    c->add_flag("--no-least-squares", no_ls, "stop after the spectral step");
    c->add_option("--samples", samples, "fit these samples instead of simulating")->check(CLI::ExistingFile);
    c->add_option("--replicates", replicates, "independent runs with seeds seed, seed+1, ...");
    c->add_option("-o,--out", out, "output directory");
    c->callback([this] { run(); });
  }

  void run() {
    json cfg = model.resolved();
    if (model.model) cfg["model"] = *model.model;
    if (N) cfg["N"] = *N;
    if (scenario) cfg["scenario"] = *scenario;
    if (basis) cfg["basis"] = *basis;
    if (M_min) cfg["M_min"] = *M_min;
    if (M_max) cfg["M_max"] = *M_max;
    if (calibration) cfg["calibration"] = *calibration;
    if (rho) cfg["rho"] = *rho;
    if (max_evals) cfg["optimizer"]["max_evals"] = *max_evals;
    if (seed) cfg["seed"] = *seed;
    if (no_ls) cfg["least_squares"] = false;
    if (samples) cfg["samples"] = *samples;
    if (replicates) cfg["replicates"] = *replicates;
    if (out) cfg["output"] = *out;
    if (!cfg.contains("output")) throw UsageError("missing config field \"output\" (or --out)");
    const bool has_rho = cfg.contains("rho") && !cfg["rho"].is_null();
    if (has_rho && cfg.contains("calibration"))
      throw UsageError("give either rho or calibration, not both");

    const HMMSpec spec = ModelOptions::spec(cfg, model.config);
    const PipelineConfig pc = pipeline_config_from_json(pipeline_fields(cfg));
    const fs::path dir = cfg["output"].get<std::string>();
    fs::create_directories(dir);
    json resolved = cfg;
    resolved["pipeline"] = to_json(pc);
    resolved["threads"] = thread_count();

    const int reps = cfg.value("replicates", 0);
    if (reps > 0) {
      if (cfg.contains("samples")) throw UsageError("--replicates simulates its own data; drop --samples");
      run_replicates_to(dir, spec, pc, reps, resolved);
      return;
    }

    PipelineReport rep;
    if (cfg.contains("samples"))
      rep = run_pipeline_on(spec, samples_from_csv(read_file(cfg["samples"].get<std::string>())), pc);
    else
      rep = run_pipeline(spec, pc);
    json j = to_json(rep);
    j["resolved_config"] = resolved;
    write_file_atomic((dir / "report.json").string(), j.dump(2) + "\n");
    write_file_atomic((dir / "curves.csv").string(), curves_to_csv(rep));
    write_file_atomic((dir / "trace.csv").string(), trace_to_csv(rep.trace));
    write_file_atomic((dir / "timing.json").string(), timing_to_json(rep).dump(2) + "\n");
    std::cerr << "M_hat=" << rep.M_hat << " rho=" << rep.rho_used << " risk_spectral=" << rep.risk_spectral.total()
              << " risk_ls=" << rep.risk_ls.total() << " (" << rep.seconds << " s)\n";
  }

  static void run_replicates_to(const fs::path& dir, const HMMSpec& spec, const PipelineConfig& pc, int reps,
                                const json& resolved) {
    const auto reports = run_replicates(spec, pc, reps);
    std::ostringstream csv;
    csv << std::setprecision(17) << "seed,M_hat,rho,risk_spectral,risk_ls,variance_spectral,variance_ls,Q_error\n";
    std::vector<double> rs, rl, vs, vl, m;
    for (int i = 0; i < reps; ++i) {
      const auto& r = reports[i];
      csv << pc.seed + i << ',' << r.M_hat << ',' << r.rho_used << ',' << r.risk_spectral.total() << ','
          << r.risk_ls.total() << ',' << r.variance_spectral << ',' << r.variance_ls << ',' << r.Q_error << '\n';
      rs.push_back(r.risk_spectral.total());
      rl.push_back(r.risk_ls.total());
      vs.push_back(r.variance_spectral);
      vl.push_back(r.variance_ls);
      m.push_back(r.M_hat);
    }
    auto q = [](const std::vector<double>& v) {
      const Quartiles s = quartiles(v);
      return json{{"q1", s.q1}, {"median", s.median}, {"q3", s.q3}};
    };
    const json summary = {{"replicates", reps},        {"M_hat", q(m)},
                          {"risk_spectral", q(rs)},    {"risk_ls", q(rl)},
                          {"variance_spectral", q(vs)}, {"variance_ls", q(vl)},
                          {"resolved_config", resolved}};
    write_file_atomic((dir / "replicates.csv").string(), csv.str());
    write_file_atomic((dir / "summary.json").string(), summary.dump(2) + "\n");
  }
};

// ------------------------------------------------------------------ select

struct SelectCmd {
  std::optional<std::string> trace, report, calibration, out;
  std::optional<long> N;
  std::optional<double> rho;
  std::vector<int> window;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("select", "Calibrate the penalty and select M from a contrast trace");
    c->add_option("--trace", trace, "trace CSV (M,gamma); needs --N")->check(CLI::ExistingFile);
    c->add_option("--report", report, "report.json from `nphmm fit`")->check(CLI::ExistingFile);
    c->add_option("-N,--N", N, "sample count of the trace");
    c->add_option("--calibration", calibration, "jump (default) or slope");
    c->add_option("--rho", rho, "fixed penalty constant (no calibration)");
    c->add_option("--window", window, "slope-fit window M_lo M_hi")->expected(2);
    c->add_option("-o,--out", out, "output JSON (default stdout)");
    c->callback([this] { run(); });
  }

  void run() {
    if (bool(trace) == bool(report)) throw UsageError("give exactly one of --trace and --report");
    if (rho && calibration) throw UsageError("give either --rho or --calibration, not both");
    SelectionTrace t;
    if (report) {
      t = trace_from_json(load_json(*report).at("trace"));
    } else {
      if (!N) throw UsageError("--trace needs --N");
      t = trace_from_csv(read_file(*trace), *N);
    }
    t.validate();
    json j = {{"trace", to_json(t)}};
    if (rho) {
      j["rho"] = *rho;
      j["M_hat"] = select_M(t, *rho);
    } else {
      const CalibrationMethod method = calibration_method_from_string(calibration.value_or("jump"));
      CalibrationResult r;
      if (method == CalibrationMethod::DimensionJump)
        r = calibrate_dimension_jump(t, default_rho_grid());
      else
        r = window.empty() ? calibrate_slope_fit(t) : calibrate_slope_fit(t, window[0], window[1]);
      j["calibration"] = to_json(r);
      j["rho"] = r.rho_hat;
      j["M_hat"] = r.M_hat;
    }
    const auto grid = default_rho_grid();
    std::vector<int> m;
    for (double r : grid) m.push_back(select_M(t, r));
    j["rho_grid"] = grid;
    j["M_of_rho"] = m;
    emit(out, j.dump(2) + "\n");
  }
};

// ---------------------------------------------------------------- hd-check

struct HdCheckCmd {
  std::vector<long> random;
  std::optional<int> chain;
  std::optional<std::string> spec_path, out;
  std::uint64_t seed = 1;
  double degenerate_tol = 1e-10;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("hd-check", "Numerical checks of the determinant condition H > 0");
    c->add_option("--random", random, "K draws: H on random instances")->expected(2);
    c->add_option("--chain-check", chain, "points for the two-state factorization check");
    c->add_option("--spec", spec_path, "H for the model in an HMM spec JSON")->check(CLI::ExistingFile);
    c->add_option("--seed", seed);
    c->add_option("--tol", degenerate_tol, "|H| <= tol * scale counts as degenerate");
    c->add_option("-o,--out", out, "output JSON (default stdout)");
    c->callback([this] { code = run(); });
  }

  int code = kOk;

  // Rows from a flat Dirichlet kept away from zero; G from random histogram
  // densities on 16 bins.
  static std::pair<Eigen::MatrixXd, Eigen::MatrixXd> draw(int K, Rng& rng) {
    Eigen::MatrixXd Q(K, K), F(16, K);
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) Q(i, j) = rng.gamma(1.0);
      Q.row(i) /= Q.row(i).sum();
      Q.row(i) = 0.98 * Q.row(i).array() + 0.02 / K;
    }
    for (int k = 0; k < K; ++k) {
      for (int m = 0; m < 16; ++m) F(m, k) = rng.gamma(1.0);
      F.col(k) *= 4.0 / F.col(k).sum();
    }
    return {Q, F.transpose() * F};
  }

  bool positive(const HValue& h) const { return h.raw > degenerate_tol * h.scale; }

  int run() {
    if (random.empty() && !chain && !spec_path) throw UsageError("give --random K N, --chain-check N or --spec FILE");
    json j = json::object();
    int status = kOk;
    if (!random.empty()) {
      const int K = int(random[0]);
      const long n = random[1];
      if (K < 2 || n < 1) throw UsageError("--random needs K >= 2 and N >= 1");
      Rng rng(seed);
      long n_pos = 0;
      double min_rel = std::numeric_limits<double>::infinity();
      for (long i = 0; i < n; ++i) {
        const auto [Q, G] = draw(K, rng);
        const HValue h = determinant_H(Q, G);
        n_pos += positive(h);
        min_rel = std::min(min_rel, h.raw / h.scale);
      }
      j["random"] = {{"K", K}, {"draws", n}, {"positive", n_pos}, {"min_H_over_scale", min_rel}};
      // Positivity is only established for two states; larger K is reported.
      if (K == 2 && n_pos < n) status = kViolation;
    }
    if (chain) {
      Rng rng(seed + 1);
      double worst = 0.0;
      int done = 0;
      while (done < *chain) {
        const double n1 = 1.0 + 2.0 * rng.uniform();
        const double n2 = n1 * (0.05 + 0.95 * rng.uniform());
        const double a = 0.98 * rng.uniform();
        const double p = 0.02 + 0.96 * rng.uniform();
        const double d = p - 1.0 + rng.uniform();
        if (std::abs(d) < 1e-3 || d <= p - 1.0 + 1e-3 || d >= p - 1e-3) continue;
        const ChainCheck c = chain_check_K2(n1, n2, a, p, d);
        worst = std::max(worst, std::abs(c.lhs - c.rhs) / std::abs(c.lhs));
        ++done;
      }
      j["chain_check"] = {{"points", *chain}, {"max_rel_mismatch", worst}, {"tolerance", 1e-6}};
      if (!(worst <= 1e-6)) status = kViolation;
    }
    if (spec_path) {
      const HMMSpec spec = spec_from_json(load_json(*spec_path));
      const int K = spec.Q.K();
      if (K < 2) throw UsageError("--spec needs at least two states");
      const HValue h = determinant_H(spec.Q.matrix(), gram_matrix(spec.emissions));
      const bool ok = positive(h);
      j["spec"] = {{"K", K}, {"H_raw", h.raw}, {"H_cleared", h.cleared}, {"scale", h.scale}, {"positive", ok}};
      if (!ok) std::cerr << "nphmm hd-check: H is not positive for " << *spec_path << " (H/scale = " << h.raw / h.scale
                         << ")\n";
      if (K == 2 && !ok) status = kViolation;
    }
    emit(out, j.dump(2) + "\n");
    return status;
  }
};

// ------------------------------------------------------------------- bench

struct BenchCmd {
  ModelOptions model;
  std::optional<long> N;
  std::optional<std::string> basis;
  int M = 20;
  std::optional<long> max_evals;
  std::optional<std::uint64_t> seed;

  void add(CLI::App& app) {
    auto* c = app.add_subcommand("bench", "Time each pipeline stage at one M");
    model.add(c);
    c->add_option("-N,--N", N);
    c->add_option("--basis", basis);
    c->add_option("-M,--M", M);
    c->add_option("--max-evals", max_evals);
    c->add_option("--seed", seed);
    c->callback([this] { run(); });
  }

  void run() {
    json cfg = model.resolved();
    if (model.model) cfg["model"] = *model.model;
    const HMMSpec spec = ModelOptions::spec(cfg, model.config);
    // Flags win over the config; the config wins over built-in defaults.
    const long N = this->N.value_or(cfg.value("N", 50000L));
    const std::string basis = this->basis.value_or(cfg.value("basis", std::string("histogram")));
    const std::uint64_t seed = this->seed.value_or(cfg.value("seed", std::uint64_t{1}));
    const long max_evals = this->max_evals.value_or(
        cfg.contains("optimizer") ? cfg["optimizer"].value("max_evals", 10000L) : 10000L);
    const BasisFamily b{basis_kind_from_string(basis), M};
    json j = {{"N", N}, {"M", M}, {"basis", basis}, {"K", spec.Q.K()}, {"threads", thread_count()}};

    auto t0 = Clock::now();
    const Samples s = sample_chain(spec, N, Scenario::B, seed);
    j["sample_s"] = seconds_since(t0);
    t0 = Clock::now();
    const MomentSet mom = empirical_moments(s, b);
    j["moments_s"] = seconds_since(t0);
    t0 = Clock::now();
    const SpectralEstimate est = spectral_estimate(mom, spec.Q.K(), seed);
    j["spectral_s"] = seconds_since(t0);

    const auto ctx = ContrastContext::make(mom, est.Q, est.pi, b);
    const Eigen::MatrixXd A0 = project_constraint(est.O, ctx.c);
    const int reps = 200;
    t0 = Clock::now();
    double sink = 0.0;
    for (int i = 0; i < reps; ++i) sink += gamma(ctx, A0);
    j["gamma_eval_s"] = seconds_since(t0) / reps;
    OptimizerConfig oc;
    oc.max_evals = max_evals;
    oc.seed = seed;
    t0 = Clock::now();
    const FitResult fit = minimize_gamma(ctx, A0, oc);
    j["least_squares_s"] = seconds_since(t0);
    j["evals"] = fit.evals;
    j["gamma_spectral"] = sink / reps;
    j["gamma_ls"] = fit.gamma_value;
    std::cout << j.dump(2) << '\n';
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonparametric HMM estimation: spectral start, penalized least squares, model selection"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<int> threads;
  app.add_option("--threads", threads, "worker threads (default: NPHMM_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);

  SimulateCmd simulate;
  MomentsCmd moments;
  SpectralCmd spectral;
  FitCmd fit;
  SelectCmd select;
  HdCheckCmd hd;
  BenchCmd bench;
  simulate.add(app);
  moments.add(app);
  spectral.add(app);
  fit.add(app);
  select.add(app);
  hd.add(app);
  bench.add(app);
  app.parse_complete_callback([&] {
    if (threads) set_thread_count(*threads);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "nphmm: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "nphmm: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    std::cerr << "nphmm: config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "nphmm: " << e.what() << '\n';
    return kNumerical;
  }
  return hd.code;
}
