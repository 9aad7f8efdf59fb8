#ifndef NPHMM_CONTRAST_HPP
#define NPHMM_CONTRAST_HPP

#include <Eigen/Core>

#include "nphmm/basis.hpp"
#include "nphmm/moments.hpp"
#include "nphmm/optimizer.hpp"

namespace nphmm {

/// Everything needed to evaluate gamma_N on S(Q, M) with Q frozen.
struct ContrastContext {
  const MomentSet* mom = nullptr;
  Eigen::MatrixXd Q;
  Eigen::VectorXd pi;
  BasisFamily basis;
  /// c_m = integral of phi_m.
  Eigen::VectorXd c;

  /// pi is taken as given; callers pass stationary(Q). The moments are
  /// referenced, not copied, and must outlive the context.
  static ContrastContext make(const MomentSet& mom, const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi,
                              const BasisFamily& b);
  static ContrastContext make(MomentSet&&, const Eigen::MatrixXd&, const Eigen::VectorXd&, const BasisFamily&) = delete;
  int K() const { return static_cast<int>(Q.rows()); }
  int M() const { return basis.M; }
};

/// gamma_N(g^{Q,f}) = ||g||^2 - (2/N) sum_s g(Z_s), the empirical term being
/// the moment tensor contracted with A on all three modes and weighted by
/// pi(k1) Q(k1, k2) Q(k2, k3).
double gamma(const ContrastContext& ctx, const Eigen::MatrixXd& A);

/// The affine chart A(., k) = a0 + B z_k of {A : c^T A(., k) = 1}, with
/// a0 = c / |c|^2 and B an orthonormal basis of the null space of c^T.
struct ConstraintChart {
  Eigen::VectorXd a0;
  Eigen::MatrixXd B;

  explicit ConstraintChart(const Eigen::VectorXd& c);
  /// Stacked z_k; A must satisfy the constraint (see project_constraint).
  Eigen::VectorXd to_params(const Eigen::MatrixXd& A) const;
  Eigen::MatrixXd from_params(const Eigen::VectorXd& z, int K) const;
};

/// Orthogonal projection of each column onto {a : c^T a = 1}.
Eigen::MatrixXd project_constraint(const Eigen::MatrixXd& A, const Eigen::VectorXd& c);

struct FitResult {
  Eigen::MatrixXd A;
  double gamma_value = 0.0;
  double gamma_init = 0.0;
  long evals = 0;
  bool converged = false;
  double seconds = 0.0;
};

/// CMA-ES over the K(M - 1) chart parameters, started at the projection of
/// A_init onto the constraint. gamma_value <= gamma_init always; converged is
/// false when no candidate improved on the start.
FitResult minimize_gamma(const ContrastContext& ctx, const Eigen::MatrixXd& A_init, const OptimizerConfig& cfg);

}  // namespace nphmm

#endif  // NPHMM_CONTRAST_HPP
