#ifndef NPHMM_HMM_MODEL_HPP
#define NPHMM_HMM_MODEL_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "nphmm/basis.hpp"

namespace nphmm {

/// How strictly to check that a transition matrix has a unique stationary law.
enum class ErgodicCheck {
  /// Irreducible and aperiodic (primitive).
  Primitive,
  /// Exactly one recurrent class; enough for a unique stationary law. Used for
  /// projected estimates, which may carry exact zeros.
  UniqueStationary,
};

/// Row-stochastic K x K matrix.
class TransitionMatrix {
 public:
  /// Throws InvalidArgument unless entries lie in [0, 1] and rows sum to one
  /// within `tol`.
  explicit TransitionMatrix(Eigen::MatrixXd Q, double tol = 1e-12);

  int K() const { return static_cast<int>(Q_.rows()); }
  const Eigen::MatrixXd& matrix() const { return Q_; }
  double operator()(int i, int j) const { return Q_(i, j); }

  /// Irreducible and aperiodic; checked on the zero pattern via Wielandt's
  /// bound, Q^((K-1)^2 + 1) > 0.
  bool is_primitive() const;
  /// A single recurrent class.
  bool has_unique_stationary() const;

 private:
  Eigen::MatrixXd Q_;
};

/// Stationary distribution of Q from the linear system (Q^T - I) pi = 0
/// augmented with sum(pi) = 1. Throws NotErgodic when the check fails.
Eigen::VectorXd stationary(const TransitionMatrix& Q, ErgodicCheck check = ErgodicCheck::Primitive);

struct HMMSpec {
  TransitionMatrix Q;
  std::vector<DensityFn> emissions;

  int K() const { return Q.K(); }
  /// Throws InvalidArgument if the emission count differs from K.
  void validate() const;
};

enum class Scenario { A, B };

/// Observed triples, one row per sample.
using Samples = Eigen::Matrix<double, Eigen::Dynamic, 3>;

/// Scenario A: N independent stationary triples. Scenario B: one stationary
/// chain of length N + 2 cut into N overlapping triples. Emissions must be Beta
/// densities. When `states` is given it receives the hidden path (3N states
/// for A, row-major by triple; N + 2 states for B); this is a test hook.
Samples sample_chain(const HMMSpec& spec, long N, Scenario scenario, std::uint64_t seed,
                     std::vector<int>* states = nullptr);

/// w(k1, k2, k3) = pi(k1) Q(k1, k2) Q(k2, k3), flattened as k1 + K (k2 + K k3).
Eigen::VectorXd triple_weights(const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi);

/// g^{Q,f} with f_k = sum_m A(m, k) phi_m.
struct JointModel {
  Eigen::MatrixXd Q;
  Eigen::VectorXd pi;
  Eigen::MatrixXd A;
  BasisFamily basis;

  /// Builds the model with pi = stationary(Q).
  static JointModel from(const TransitionMatrix& Q, Eigen::MatrixXd A, const BasisFamily& b);

  int K() const { return static_cast<int>(Q.rows()); }
  int M() const { return basis.M; }
};

double joint_density(const JointModel& model, double y1, double y2, double y3);

/// ||g^{Q,f}||_2^2 in closed form: pi^T (G o Q (G o Q G Q^T) Q^T) pi with
/// G = A^T A and o the entrywise product.
double joint_norm_sq(const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi, const Eigen::MatrixXd& G);
double joint_norm_sq(const JointModel& model);

}  // namespace nphmm

#endif  // NPHMM_HMM_MODEL_HPP
