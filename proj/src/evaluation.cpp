#include "nphmm/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nphmm/error.hpp"
#include "nphmm/moments.hpp"
#include "nphmm/parallel.hpp"
#include "nphmm/rng.hpp"
#include "nphmm/spectral.hpp"

namespace nphmm {

namespace {

template <typename Visit>
void for_each_permutation(int K, Visit&& visit) {
  std::vector<int> perm(K);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Eigen::MatrixXd column_distances(const Eigen::MatrixXd& A_hat, const Eigen::MatrixXd& A_ref) {
  // dist(j, k) = |A_hat(., j) - A_ref(., k)|^2
  const Eigen::Index K = A_ref.cols();
  Eigen::MatrixXd d(K, K);
  for (Eigen::Index j = 0; j < K; ++j)
    for (Eigen::Index k = 0; k < K; ++k) d(j, k) = (A_hat.col(j) - A_ref.col(k)).squaredNorm();
  return d;
}

Error staged(const std::string& stage, const Error& e) { return Error(e.kind(), stage + ": " + e.what()); }

}  // namespace

AlignedComparison align(const Eigen::MatrixXd& A_hat, const Eigen::MatrixXd& A_ref, const Eigen::MatrixXd& Q_hat,
                        const Eigen::MatrixXd& Q_ref) {
  const int K = static_cast<int>(A_ref.cols());
  if (A_hat.rows() != A_ref.rows() || A_hat.cols() != K)
    throw Error(ErrorKind::InvalidArgument, "aligned matrices differ in shape");
  if (K > 8) throw Error(ErrorKind::InvalidArgument, "exhaustive alignment supports K <= 8");
  const Eigen::MatrixXd dist = column_distances(A_hat, A_ref);
  AlignedComparison out;
  out.total = out.max_sq = std::numeric_limits<double>::infinity();
  for_each_permutation(K, [&](const std::vector<int>& perm) {
    double sum = 0.0, mx = 0.0;
    for (int k = 0; k < K; ++k) {
      sum += dist(perm[k], k);
      mx = std::max(mx, dist(perm[k], k));
    }
    if (sum < out.total) {
      out.total = sum;
      out.perm = perm;
    }
    if (mx < out.max_sq) {
      out.max_sq = mx;
      out.perm_max = perm;
    }
  });
  out.per_state_sq.resize(K);
  for (int k = 0; k < K; ++k) out.per_state_sq[k] = dist(out.perm[k], k);
  if (Q_hat.size() > 0 && Q_ref.size() > 0) {
    Eigen::MatrixXd aligned(K, K);
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < K; ++j) aligned(i, j) = Q_hat(out.perm[i], out.perm[j]);
    out.Q_error = (Q_ref - aligned).norm();
  }
  return out;
}

Eigen::MatrixXd project_all(const std::vector<DensityFn>& fs, const BasisFamily& b) {
  Eigen::MatrixXd A(b.M, static_cast<Eigen::Index>(fs.size()));
  for (std::size_t k = 0; k < fs.size(); ++k) A.col(k) = project(fs[k], b);
  return A;
}

double variance_term(const Eigen::MatrixXd& A_hat, const std::vector<DensityFn>& f_true, const BasisFamily& b) {
  if (A_hat.rows() != b.M || A_hat.cols() != static_cast<Eigen::Index>(f_true.size()))
    throw Error(ErrorKind::InvalidArgument, "A_hat must be M x K");
  return align(A_hat, project_all(f_true, b)).max_sq;
}

RiskReport risk_l2(const Eigen::MatrixXd& A_hat, const std::vector<DensityFn>& f_true, const BasisFamily& b) {
  const int K = static_cast<int>(f_true.size());
  if (A_hat.rows() != b.M || A_hat.cols() != K) throw Error(ErrorKind::InvalidArgument, "A_hat must be M x K");
  const Eigen::MatrixXd A_ref = project_all(f_true, b);
  const AlignedComparison al = align(A_hat, A_ref);
  RiskReport r;
  r.perm = al.perm;
  r.bias_sq.resize(K);
  r.variance_sq = al.per_state_sq;
  for (int k = 0; k < K; ++k) {
    const Eigen::VectorXd a = A_ref.col(k);
    const DensityFn& f = f_true[k];
    r.bias_sq[k] = integrate_against(f, b, [&](double y) {
      const double e = f(y) - evaluate_expansion(b, a, y);
      return e * e;
    });
  }
  r.risk = r.bias_sq + r.variance_sq;
  return r;
}

const PerModel& PipelineReport::selected() const {
  for (const auto& m : models)
    if (m.M == M_hat) return m;
  throw Error(ErrorKind::InvalidArgument, "selected dimension not among fitted models");
}

PipelineReport run_pipeline(const HMMSpec& spec, const PipelineConfig& cfg, bool parallel_models) {
  spec.validate();
  Samples samples;
  try {
    samples = sample_chain(spec, cfg.N, cfg.scenario, cfg.seed);
  } catch (const Error& e) {
    throw staged("sampling", e);
  }
  return run_pipeline_on(spec, samples, cfg, parallel_models);
}

PipelineReport run_pipeline_on(const HMMSpec& spec, const Samples& samples, const PipelineConfig& cfg,
                               bool parallel_models) {
  const auto t0 = std::chrono::steady_clock::now();
  spec.validate();
  const int K = spec.K();
  const bool trig = cfg.basis == BasisKind::Trigonometric;
  PipelineReport rep;
  rep.config = cfg;
  rep.K = K;
  const long N = samples.rows();
  const int M_max = cfg.M_max > 0 ? cfg.M_max : default_M_max(N);
  int M_min = cfg.M_min > 0 ? cfg.M_min : K;
  std::vector<int> Ms;
  for (int M = M_min; M <= M_max; ++M)
    if (!trig || M % 2 == 1) Ms.push_back(M);
  if (Ms.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two model dimensions");

  // The trigonometric family is nested: one moment pass at the largest M.
  MomentSet trig_full;
  if (trig) {
    try {
      trig_full = empirical_moments(samples, BasisFamily::trigonometric(Ms.back()));
    } catch (const Error& e) {
      throw staged("moments", e);
    }
  }

  const int n = static_cast<int>(Ms.size());
  std::vector<std::optional<PerModel>> slots(n);
  std::vector<std::string> reasons(n);
  auto fit_one = [&](int i) {
    const int M = Ms[i];
    const BasisFamily b{cfg.basis, M};
    std::ostringstream where;
    where << " (M = " << M << ")";
    MomentSet mom;
    try {
      mom = trig ? trig_full.truncate(M) : empirical_moments(samples, b);
    } catch (const Error& e) {
      throw staged("moments" + where.str(), e);
    }
    const std::uint64_t stream = splitmix64(cfg.seed) ^ splitmix64(0x5eed0000ULL + static_cast<std::uint64_t>(M));
    SpectralEstimate est;
    try {
      est = spectral_estimate(mom, K, stream);
    } catch (const Error& e) {
      reasons[i] = e.what();
      return;
    }
    PerModel pm;
    pm.M = M;
    pm.A_spectral = est.O;
    pm.Q_spectral = est.Q;
    pm.pi_spectral = est.pi;
    try {
      const ContrastContext ctx = ContrastContext::make(mom, est.Q, est.pi, b);
      pm.gamma_spectral = gamma(ctx, project_constraint(est.O, ctx.c));
      if (cfg.least_squares) {
        OptimizerConfig oc = cfg.optimizer;
        oc.seed = splitmix64(stream + 1);
        pm.fit = minimize_gamma(ctx, est.O, oc);
      } else {
        pm.fit.A = project_constraint(est.O, ctx.c);
        pm.fit.gamma_value = pm.fit.gamma_init = pm.gamma_spectral;
      }
    } catch (const Error& e) {
      throw staged("least squares" + where.str(), e);
    }
    try {
      const Eigen::MatrixXd A_ref = project_all(spec.emissions, b);
      pm.variance_spectral = align(pm.A_spectral, A_ref).max_sq;
      pm.variance_ls = align(pm.fit.A, A_ref).max_sq;
      pm.risk_spectral = risk_l2(pm.A_spectral, spec.emissions, b).total();
      pm.risk_ls = risk_l2(pm.fit.A, spec.emissions, b).total();
      pm.Q_error = align(pm.A_spectral, A_ref, pm.Q_spectral, spec.Q.matrix()).Q_error;
    } catch (const Error& e) {
      throw staged("evaluation" + where.str(), e);
    }
    slots[i] = std::move(pm);
  };
  if (parallel_models)
    parallel_for(n, fit_one);
  else
    for (int i = 0; i < n; ++i) fit_one(i);

  rep.trace.N = N;
  for (int i = 0; i < n; ++i) {
    if (!slots[i]) {
      rep.skipped.push_back({Ms[i], reasons[i]});
      continue;
    }
    rep.trace.M.push_back(slots[i]->M);
    rep.trace.gamma.push_back(slots[i]->fit.gamma_value);
    rep.models.push_back(std::move(*slots[i]));
  }
  if (rep.models.size() < 2) throw Error(ErrorKind::CalibrationFailed, "selection: fewer than two models were fitted");

  try {
    if (cfg.rho) {
      rep.rho_used = *cfg.rho;
      rep.M_hat = select_M(rep.trace, rep.rho_used);
    } else {
      if (cfg.calibration == CalibrationMethod::DimensionJump) {
        // The grid may not reach the contrast scale (K = 1 has |g|^2 = |f|^6);
        // the slope fit has no grid, so it takes over and is reported as such.
        try {
          rep.calibration = calibrate_dimension_jump(rep.trace, default_rho_grid());
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NoJump) throw;
          rep.calibration = calibrate_slope_fit(rep.trace);
        }
      } else {
        rep.calibration = calibrate_slope_fit(rep.trace);
      }
      rep.rho_used = rep.calibration->rho_hat;
      rep.M_hat = rep.calibration->M_hat;
    }
  } catch (const Error& e) {
    throw staged("selection", e);
  }
  rep.rho_grid = default_rho_grid();
  for (double r : rep.rho_grid) rep.M_of_rho.push_back(select_M(rep.trace, r));

  const PerModel& sel = rep.selected();
  const BasisFamily b{cfg.basis, sel.M};
  rep.risk_spectral = risk_l2(sel.A_spectral, spec.emissions, b);
  rep.risk_ls = risk_l2(sel.fit.A, spec.emissions, b);
  rep.variance_spectral = sel.variance_spectral;
  rep.variance_ls = sel.variance_ls;
  rep.Q_error = sel.Q_error;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<PipelineReport> run_replicates(const HMMSpec& spec, const PipelineConfig& cfg, int replicates) {
  std::vector<PipelineReport> out(replicates);
  parallel_for(replicates, [&](int i) {
    PipelineConfig c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(i);
    out[i] = run_pipeline(spec, c, false);
  });
  return out;
}

Quartiles quartiles(std::vector<double> v) {
  if (v.empty()) throw Error(ErrorKind::InvalidArgument, "quartiles of an empty set");
  std::sort(v.begin(), v.end());
  auto at = [&v](double p) {
    const double h = p * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - lo) * (v[hi] - v[lo]);
  };
  return {at(0.25), at(0.5), at(0.75)};
}

}  // namespace nphmm
