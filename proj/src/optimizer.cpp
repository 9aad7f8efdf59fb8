#include "nphmm/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "nphmm/error.hpp"
#include "nphmm/rng.hpp"

namespace nphmm {

OptimizerResult cmaes_minimize(const Objective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg) {
  const int n = static_cast<int>(x0.size());
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "optimizer dimension must be positive");
  const int lambda = cfg.population > 0 ? cfg.population : 4 + static_cast<int>(std::floor(3.0 * std::log(double(n))));
  if (lambda < 2) throw Error(ErrorKind::InvalidArgument, "population must be at least 2");
  if (cfg.max_evals < lambda) throw Error(ErrorKind::InvalidArgument, "evaluation budget below one generation");
  const double rms = std::sqrt(x0.squaredNorm() / n);
  const double sigma0 = cfg.sigma0 > 0.0 ? cfg.sigma0 : 0.3 * std::max(rms, 0.1);

  OptimizerResult best;
  best.x = x0;
  best.f = f(x0);
  best.evals = 1;
  if (!std::isfinite(best.f)) throw Error(ErrorKind::InvalidArgument, "objective is not finite at the start point");

  // Strategy parameters.
  const int mu = lambda / 2;
  Eigen::VectorXd w(mu);
  for (int i = 0; i < mu; ++i) w[i] = std::log(mu + 0.5) - std::log(i + 1.0);
  w /= w.sum();
  const double mueff = 1.0 / w.squaredNorm();
  const double cs = (mueff + 2.0) / (n + mueff + 5.0);
  const double ds = 1.0 + 2.0 * std::max(0.0, std::sqrt((mueff - 1.0) / (n + 1.0)) - 1.0) + cs;
  const double cc = (4.0 + mueff / n) / (n + 4.0 + 2.0 * mueff / n);
  const double c1 = 2.0 / ((n + 1.3) * (n + 1.3) + mueff);
  const double cmu = std::min(1.0 - c1, 2.0 * (mueff - 2.0 + 1.0 / mueff) / ((n + 2.0) * (n + 2.0) + mueff));
  const double chi_n = std::sqrt(double(n)) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

  Eigen::VectorXd mean = x0;
  double sigma = sigma0;
  Eigen::VectorXd ps = Eigen::VectorXd::Zero(n), pc = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd C = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd Bm = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd Dv = Eigen::VectorXd::Ones(n);
  Eigen::MatrixXd invsqrtC = Eigen::MatrixXd::Identity(n, n);
  long eigen_eval = 0;

  Rng rng(cfg.seed);
  Eigen::MatrixXd Y(n, lambda), X(n, lambda);
  std::vector<double> fit(lambda);
  std::vector<int> idx(lambda);
  const int stagnation = cfg.stagnation_generations > 0
                             ? cfg.stagnation_generations
                             : 10 + static_cast<int>(std::ceil(30.0 * n / lambda));
  int nonfinite_generations = 0;
  double window_best = best.f;
  int window_start = 0;

  for (int gen = 0;; ++gen) {
    if (best.evals + lambda > cfg.max_evals) break;
    for (int k = 0; k < lambda; ++k) {
      Eigen::VectorXd z(n);
      for (int i = 0; i < n; ++i) z[i] = rng.normal();
      Y.col(k) = Bm * Dv.cwiseProduct(z);
      X.col(k) = mean + sigma * Y.col(k);
    }
    bool any_finite = false;
    for (int k = 0; k < lambda; ++k) {
      const double v = f(X.col(k));
      fit[k] = std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
      if (std::isfinite(v)) {
        any_finite = true;
        if (v < best.f) {
          best.f = v;
          best.x = X.col(k);
        }
      }
    }
    best.evals += lambda;
    best.generations = gen + 1;
    nonfinite_generations = any_finite ? 0 : nonfinite_generations + 1;
    if (nonfinite_generations >= lambda)
      throw Error(ErrorKind::NonFiniteObjective, "objective was non-finite for every candidate of consecutive generations");

    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return fit[a] < fit[b]; });

    // Recombination and evolution paths.
    Eigen::VectorXd yw = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < mu; ++i) yw += w[i] * Y.col(idx[i]);
    mean += sigma * yw;
    ps = (1.0 - cs) * ps + std::sqrt(cs * (2.0 - cs) * mueff) * (invsqrtC * yw);
    const double ps_norm = ps.norm();
    const bool hsig =
        ps_norm / std::sqrt(1.0 - std::pow(1.0 - cs, 2.0 * (gen + 1))) < (1.4 + 2.0 / (n + 1.0)) * chi_n;
    pc = (1.0 - cc) * pc + (hsig ? std::sqrt(cc * (2.0 - cc) * mueff) : 0.0) * yw;

    // Covariance: rank-one plus rank-mu.
    Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < mu; ++i) rank_mu.noalias() += w[i] * Y.col(idx[i]) * Y.col(idx[i]).transpose();
    const double delta_h = hsig ? 0.0 : cc * (2.0 - cc);
    C = (1.0 - c1 - cmu) * C + c1 * (pc * pc.transpose() + delta_h * C) + cmu * rank_mu;

    sigma *= std::exp((cs / ds) * (ps_norm / chi_n - 1.0));

    // Lazy eigendecomposition, with an eigenvalue floor relative to the trace.
    if (best.evals - eigen_eval > lambda / (c1 + cmu) / n / 10.0) {
      eigen_eval = best.evals;
      C = 0.5 * (C + C.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
      Eigen::VectorXd ev = es.eigenvalues().cwiseMax(1e-14 * C.trace());
      Bm = es.eigenvectors();
      C = Bm * ev.asDiagonal() * Bm.transpose();
      Dv = ev.cwiseSqrt();
      invsqrtC = Bm * Dv.cwiseInverse().asDiagonal() * Bm.transpose();
    }

    if (gen + 1 - window_start >= stagnation) {
      if (window_best - best.f < cfg.tol_fun) {
        best.converged = true;
        break;
      }
      window_best = best.f;
      window_start = gen + 1;
    }
    if (!std::isfinite(sigma) || sigma * Dv.maxCoeff() < 1e-300) {
      best.converged = true;
      break;
    }
  }
  return best;
}

}  // namespace nphmm
