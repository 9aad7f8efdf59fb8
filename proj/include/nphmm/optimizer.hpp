#ifndef NPHMM_OPTIMIZER_HPP
#define NPHMM_OPTIMIZER_HPP

#include <cstdint>
#include <functional>

#include <Eigen/Core>

namespace nphmm {

struct OptimizerConfig {
  /// Initial step size; 0 selects 0.3 * max(rms(x0), 0.1).
  double sigma0 = 0.0;
  long max_evals = 10000;
  std::uint64_t seed = 1;
  /// Offspring per generation; 0 selects 4 + floor(3 ln dim).
  int population = 0;
  /// Stop when the best value improves by less than this over
  /// `stagnation_generations` generations; 0 selects 10 + ceil(30 dim / population).
  double tol_fun = 1e-12;
  int stagnation_generations = 0;
};

struct OptimizerResult {
  Eigen::VectorXd x;
  double f = 0.0;
  long evals = 0;
  int generations = 0;
  /// True when a stopping rule other than the budget fired.
  bool converged = false;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// (mu/mu_w, lambda) CMA-ES with cumulative step-size adaptation and
/// rank-one plus rank-mu covariance updates. Returns the best point ever
/// evaluated, x0 included. Non-finite values rank last; NonFiniteObjective is
/// thrown after `population` consecutive generations in which every
/// candidate was non-finite.
OptimizerResult cmaes_minimize(const Objective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg);

}  // namespace nphmm

#endif  // NPHMM_OPTIMIZER_HPP
