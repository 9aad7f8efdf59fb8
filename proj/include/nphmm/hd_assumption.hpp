#ifndef NPHMM_HD_ASSUMPTION_HPP
#define NPHMM_HD_ASSUMPTION_HPP

#include <cstdint>
#include <span>

#include <Eigen/Core>

namespace nphmm {

/// Second-order term D(Q, G, U) of ||g^{Q,f+h} - g^{Q,f}||^2 when the
/// perturbation is h_k = sum_j U(k, j) f_j, with G the Gram matrix of f and
/// U 1 = 0. Q must have a unique stationary law.
double quadratic_form_D(const Eigen::MatrixXd& Q, const Eigen::MatrixXd& G, const Eigen::MatrixXd& U);

/// Matrix of D over the K(K-1) coordinates of U in the basis
/// E_{ij} - E_{i,K-1}, j < K-1 (row-major in (i, j)), by polarization.
Eigen::MatrixXd D_matrix(const Eigen::MatrixXd& Q, const Eigen::MatrixXd& G);

struct HValue {
  /// det(D_matrix(Q, G)).
  double raw = 0.0;
  /// raw * S^{2 K (K-1)}, S the sum of the principal (K-1)-minors of I - Q,
  /// which is the common denominator of the stationary law.
  double cleared = 0.0;
  /// |G|_F^{3 K (K-1)}; the natural magnitude of raw.
  double scale = 0.0;
};

HValue determinant_H(const Eigen::MatrixXd& Q, const Eigen::MatrixXd& G);

/// Closed-form coefficients of D for K = 2, Q = [[1-p, p], [q, 1-q]],
/// U = [[alpha, -alpha], [beta, -beta]]:
/// D = D11 alpha^2 + 2 D12 alpha beta + D22 beta^2.
struct K2Coefficients {
  double D11 = 0.0;
  double D22 = 0.0;
  double D12 = 0.0;
};

K2Coefficients explicit_K2_coefficients(double p, double q, const Eigen::Matrix2d& G);
double explicit_K2_D(double p, double q, const Eigen::Matrix2d& G, double alpha, double beta);

struct P5Term {
  std::uint8_t ex, ey, ez, et;
  std::int32_t coef;
};

std::span<const P5Term> p5_terms();
/// FNV-1a over the table rows (each field as a little-endian int32).
std::uint64_t p5_checksum();
double evaluate_P5(double x, double y, double z, double t);

/// Both sides of the K = 2 factorization of H through P5.
struct ChainCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double x = 0.0, y = 0.0, z = 0.0, t = 0.0;
};

/// lhs = determinant_H(Q, G).raw with Q from (p, q = 1 - p + d) and
/// G = [[n1^2, a n1 n2], [a n1 n2, n2^2]]. rhs is the factored form
/// p^2 (1-a^2) d^2 n1^2 n2^2 (1+d-p)^2 / (1+d)^4 * n1^8 P5(x, y, z, t)
/// / ((1+t^2)^4 (1+y^2)^4 (1+z^2)^4 (1+x^2)^8) with
/// n2/n1 = 1/(1+x^2), a = y^2/(1+y^2), p = z^2/(1+z^2),
/// d = ((tz)^2 - 1)/((1+t^2)(1+z^2)). Throws DomainError off the domain.
ChainCheck chain_check_K2(double n1, double n2, double a, double p, double d);

}  // namespace nphmm

#endif  // NPHMM_HD_ASSUMPTION_HPP
