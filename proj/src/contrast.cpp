#include "nphmm/contrast.hpp"

#include <chrono>
#include <sstream>

#include <Eigen/QR>

#include "nphmm/error.hpp"
#include "nphmm/hmm_model.hpp"

namespace nphmm {

ContrastContext ContrastContext::make(const MomentSet& mom, const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi,
                                      const BasisFamily& b) {
  validate(b);
  if (mom.M != b.M) {
    std::ostringstream os;
    os << "moment set has M = " << mom.M << " but basis has M = " << b.M;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  if (Q.rows() != Q.cols() || pi.size() != Q.rows())
    throw Error(ErrorKind::InvalidArgument, "Q and pi dimensions disagree");
  return ContrastContext{&mom, Q, pi, b, integral_coefficients(b)};
}

double gamma(const ContrastContext& ctx, const Eigen::MatrixXd& A) {
  const int M = ctx.M();
  if (A.rows() != M || A.cols() != ctx.K()) throw Error(ErrorKind::InvalidArgument, "A must be M x K");
  const double norm = joint_norm_sq(ctx.Q, ctx.pi, A.transpose() * A);
  // sum_{abc} T(a,b,c) sum_{k2} A(b,k2) U(a,k2) V(c,k2) with U = A diag(pi) Q
  // and V = A Q^T.
  const Eigen::MatrixXd U = A * ctx.pi.asDiagonal() * ctx.Q;
  const Eigen::MatrixXd V = A * ctx.Q.transpose();
  Eigen::MatrixXd SV(M, ctx.K());
  double linear = 0.0;
  for (int b = 0; b < M; ++b) {
    SV.noalias() = ctx.mom->slice(b) * V;
    linear += (U.cwiseProduct(SV).colwise().sum().array() * A.row(b).array()).sum();
  }
  return norm - 2.0 * linear;
}

ConstraintChart::ConstraintChart(const Eigen::VectorXd& c) {
  const double cc = c.squaredNorm();
  if (!(cc > 0.0)) throw Error(ErrorKind::InvalidArgument, "constraint vector is zero");
  a0 = c / cc;
  // The last M - 1 columns of a full QR of c span its orthogonal complement.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(c);
  const Eigen::MatrixXd full = qr.householderQ();
  B = full.rightCols(c.size() - 1);
}

Eigen::VectorXd ConstraintChart::to_params(const Eigen::MatrixXd& A) const {
  const Eigen::Index m1 = B.cols(), K = A.cols();
  Eigen::VectorXd z(m1 * K);
  for (Eigen::Index k = 0; k < K; ++k) z.segment(k * m1, m1) = B.transpose() * (A.col(k) - a0);
  return z;
}

Eigen::MatrixXd ConstraintChart::from_params(const Eigen::VectorXd& z, int K) const {
  const Eigen::Index m1 = B.cols();
  Eigen::MatrixXd A(a0.size(), K);
  for (int k = 0; k < K; ++k) A.col(k) = a0 + B * z.segment(k * m1, m1);
  return A;
}

Eigen::MatrixXd project_constraint(const Eigen::MatrixXd& A, const Eigen::VectorXd& c) {
  const Eigen::RowVectorXd excess = (c.transpose() * A).array() - 1.0;
  return A - (c / c.squaredNorm()) * excess;
}

FitResult minimize_gamma(const ContrastContext& ctx, const Eigen::MatrixXd& A_init, const OptimizerConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const int K = ctx.K();
  FitResult out;
  out.A = project_constraint(A_init, ctx.c);
  out.gamma_init = out.gamma_value = gamma(ctx, out.A);
  if (ctx.M() == 1) {
    // The constraint pins every column; nothing to optimize.
    out.converged = true;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }
  const ConstraintChart chart(ctx.c);
  const Eigen::VectorXd z0 = chart.to_params(out.A);
  const OptimizerResult r =
      cmaes_minimize([&](const Eigen::VectorXd& z) { return gamma(ctx, chart.from_params(z, K)); }, z0, cfg);
  out.evals = r.evals;
  if (r.f < out.gamma_init) {
    out.A = chart.from_params(r.x, K);
    out.gamma_value = r.f;
    out.converged = true;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace nphmm
