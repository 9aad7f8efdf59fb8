#ifndef NPHMM_SPECTRAL_HPP
#define NPHMM_SPECTRAL_HPP

#include <cstdint>

#include <Eigen/Core>

#include "nphmm/moments.hpp"
#include "nphmm/rng.hpp"

namespace nphmm {

struct SpectralDiagnostics {
  /// Singular values of P, descending.
  Eigen::VectorXd singular_values;
  double cond_whitening = 0.0;  ///< of U^T P U
  double cond_eigenvectors = 0.0;  ///< of R
  double cond_UO = 0.0;  ///< of U^T O
  /// Largest |imag/real| ratio among the accepted eigenvalues.
  double max_imag_ratio = 0.0;
  int redraws = 0;
};

/// Spectral estimates of the emission coefficients (columns of O), the
/// stationary law and the transition matrix.
struct SpectralEstimate {
  Eigen::MatrixXd O;
  Eigen::VectorXd pi_tilde;
  Eigen::MatrixXd Q;
  Eigen::VectorXd pi;
  SpectralDiagnostics diagnostics;
};

struct SpectralOptions {
  double whitening_cond_limit = 1e12;
  double rank_rel_tol = 1e-12;
  double imag_rel_tol = 1e-8;
  int max_attempts = 10;
};

/// Method-of-moments estimate from a moment set. Throws KTooLarge,
/// SingularWhitening or NonRealDiagonalization.
///
/// Theta is drawn from Rng(seed, attempt) for attempt = 0, 1, ...; eigenvector
/// columns are ordered by decreasing eigenvalue of C(1).
SpectralEstimate spectral_estimate(const MomentSet& mom, int K, std::uint64_t seed,
                                   const SpectralOptions& opt = {});

/// Euclidean projection of a vector onto the probability simplex.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v);

/// Frobenius-nearest row-stochastic matrix (row-wise simplex projection).
Eigen::MatrixXd project_transition(const Eigen::MatrixXd& X);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// signs of diag(R) moved into Q.
Eigen::MatrixXd haar_orthogonal(int K, Rng& rng);

}  // namespace nphmm

#endif  // NPHMM_SPECTRAL_HPP
