#ifndef NPHMM_EVALUATION_HPP
#define NPHMM_EVALUATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nphmm/basis.hpp"
#include "nphmm/contrast.hpp"
#include "nphmm/hmm_model.hpp"
#include "nphmm/optimizer.hpp"
#include "nphmm/selection.hpp"

namespace nphmm {

/// Estimate vs. reference after the best relabeling.
///
/// perm[k] is the estimated state matched to reference state k.
struct AlignedComparison {
  std::vector<int> perm;
  /// |a_hat(., perm[k]) - a_ref(., k)|^2 for each k.
  Eigen::VectorXd per_state_sq;
  /// Sum of per_state_sq; minimal over all K! relabelings.
  double total = 0.0;
  /// min over relabelings of max_k of the squared distance, with its own
  /// minimizing relabeling.
  double max_sq = 0.0;
  std::vector<int> perm_max;
  /// |Q_ref - P Q_hat P^T|_F under perm; 0 when no Q is given.
  double Q_error = 0.0;
};

/// Exhaustive over permutations; K <= 8.
AlignedComparison align(const Eigen::MatrixXd& A_hat, const Eigen::MatrixXd& A_ref,
                        const Eigen::MatrixXd& Q_hat = {}, const Eigen::MatrixXd& Q_ref = {});

/// Columns are the projections of the densities on the basis.
Eigen::MatrixXd project_all(const std::vector<DensityFn>& fs, const BasisFamily& b);

/// min over relabelings of max_k |f_hat_k - f*_{M, tau(k)}|^2.
double variance_term(const Eigen::MatrixXd& A_hat, const std::vector<DensityFn>& f_true, const BasisFamily& b);

struct RiskReport {
  std::vector<int> perm;
  /// |f*_k - f*_{M,k}|^2 by quadrature.
  Eigen::VectorXd bias_sq;
  /// Squared coefficient distance to the projection.
  Eigen::VectorXd variance_sq;
  /// bias_sq + variance_sq.
  Eigen::VectorXd risk;
  double total() const { return risk.sum(); }
};

/// Squared L2 risk per true state under the sum-minimizing relabeling.
RiskReport risk_l2(const Eigen::MatrixXd& A_hat, const std::vector<DensityFn>& f_true, const BasisFamily& b);

struct PipelineConfig {
  long N = 50000;
  Scenario scenario = Scenario::B;
  BasisKind basis = BasisKind::Histogram;
  /// 0 selects K (or the next odd value for the trigonometric basis).
  int M_min = 0;
  /// 0 selects default_M_max(N).
  int M_max = 0;
  CalibrationMethod calibration = CalibrationMethod::DimensionJump;
  /// When set, selection uses this rho and no calibration is run.
  std::optional<double> rho;
  OptimizerConfig optimizer;
  std::uint64_t seed = 1;
  /// Run the least-squares refinement (otherwise the trace uses the contrast
  /// of the spectral estimate).
  bool least_squares = true;
};

struct PerModel {
  int M = 0;
  Eigen::MatrixXd A_spectral;
  Eigen::MatrixXd Q_spectral;
  Eigen::VectorXd pi_spectral;
  FitResult fit;
  double gamma_spectral = 0.0;
  double variance_spectral = 0.0;
  double variance_ls = 0.0;
  double risk_spectral = 0.0;
  double risk_ls = 0.0;
  double Q_error = 0.0;
};

struct SkippedModel {
  int M = 0;
  std::string reason;
};

struct PipelineReport {
  PipelineConfig config;
  int K = 0;
  std::vector<PerModel> models;
  std::vector<SkippedModel> skipped;
  SelectionTrace trace;
  std::optional<CalibrationResult> calibration;
  double rho_used = 0.0;
  int M_hat = 0;
  /// select_M over the default rho grid, for the dimension-jump picture.
  std::vector<double> rho_grid;
  std::vector<int> M_of_rho;
  RiskReport risk_spectral;
  RiskReport risk_ls;
  double variance_spectral = 0.0;
  double variance_ls = 0.0;
  double Q_error = 0.0;
  double seconds = 0.0;

  const PerModel& selected() const;
};

/// Sample, then for each M: moments, spectral estimate, least squares from
/// the spectral start; calibrate, select M_hat and score both estimators.
/// Models where the spectral step fails are skipped and listed. A dimension
/// jump that finds no drop on the grid falls back to the slope fit. Errors carry
/// the stage name in their message.
PipelineReport run_pipeline(const HMMSpec& spec, const PipelineConfig& cfg, bool parallel_models = true);

/// Pipeline on pre-drawn samples (no truth needed for estimation; truth is
/// used only for scoring).
PipelineReport run_pipeline_on(const HMMSpec& spec, const Samples& samples, const PipelineConfig& cfg,
                               bool parallel_models = true);

/// Replicates with seeds seed + i, run concurrently.
std::vector<PipelineReport> run_replicates(const HMMSpec& spec, const PipelineConfig& cfg, int replicates);

struct Quartiles {
  double q1 = 0.0, median = 0.0, q3 = 0.0;
};
Quartiles quartiles(std::vector<double> v);

}  // namespace nphmm

#endif  // NPHMM_EVALUATION_HPP
