#ifndef NPHMM_MOMENTS_HPP
#define NPHMM_MOMENTS_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "nphmm/basis.hpp"
#include "nphmm/hmm_model.hpp"

namespace nphmm {

/// First, second and third order moment statistics in a basis of dimension M.
///
/// L(a) = E phi_a(Y1), N(a, b) = E phi_a(Y1) phi_b(Y2),
/// P(a, c) = E phi_a(Y1) phi_c(Y3), T(a, b, c) = E phi_a(Y1) phi_b(Y2) phi_c(Y3).
///
/// T is stored so that the slice T(., b, .) is a contiguous column-major
/// M x M matrix with rows a and columns c.
struct MomentSet {
  int M = 0;
  long n_samples = 0;
  Eigen::VectorXd L;
  Eigen::MatrixXd N;
  Eigen::MatrixXd P;
  std::vector<double> T;

  static MomentSet zeros(int M);

  double tensor(int a, int b, int c) const { return T[a + M * (c + static_cast<std::size_t>(M) * b)]; }
  Eigen::Map<const Eigen::MatrixXd> slice(int b) const {
    return {T.data() + static_cast<std::size_t>(M) * M * b, M, M};
  }
  Eigen::Map<Eigen::MatrixXd> slice(int b) { return {T.data() + static_cast<std::size_t>(M) * M * b, M, M}; }

  /// Moments of the first M' basis functions. Only meaningful for nested
  /// families (trigonometric).
  MomentSet truncate(int M_new) const;
};

/// Sample averages over the rows of `samples`. Accumulated over fixed chunks
/// of 4096 rows and combined by a pairwise tree whose shape depends only on
/// the sample count, so the result is bitwise independent of thread count.
/// Histogram bases take a sparse path (one active function per coordinate).
MomentSet empirical_moments(const Samples& samples, const BasisFamily& b);

/// Exact moments of g^{Q,f}.
MomentSet population_moments(const JointModel& model);

/// Pooled moments of two disjoint sample sets.
MomentSet combine(const MomentSet& a, const MomentSet& b);

/// Binary file: magic "NPHMM-M1", M and N as little-endian uint64, then L, N,
/// P, T as little-endian float64 (T in storage order).
void write_moments(const MomentSet& m, const std::string& path);
MomentSet read_moments(const std::string& path);

}  // namespace nphmm

#endif  // NPHMM_MOMENTS_HPP
