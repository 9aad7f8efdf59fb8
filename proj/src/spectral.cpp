#include "nphmm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "nphmm/error.hpp"
#include "nphmm/hmm_model.hpp"

namespace nphmm {

namespace {

double condition_number(const Eigen::MatrixXd& X) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(X).singularValues();
  const double lo = s[s.size() - 1];
  return lo > 0.0 ? s[0] / lo : std::numeric_limits<double>::infinity();
}

}  // namespace

Eigen::VectorXd project_simplex(const Eigen::VectorXd& v) {
  // Sort-based projection: find the threshold theta with sum(max(v - theta, 0)) = 1.
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cum += u[j];
    const double t = (cum - 1.0) / double(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

Eigen::MatrixXd project_transition(const Eigen::MatrixXd& X) {
  Eigen::MatrixXd out(X.rows(), X.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i) out.row(i) = project_simplex(X.row(i).transpose()).transpose();
  return out;
}

Eigen::MatrixXd haar_orthogonal(int K, Rng& rng) {
  Eigen::MatrixXd g(K, K);
  for (int j = 0; j < K; ++j)
    for (int i = 0; i < K; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < K; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

SpectralEstimate spectral_estimate(const MomentSet& mom, int K, std::uint64_t seed, const SpectralOptions& opt) {
  const int M = mom.M;
  if (K < 1) throw Error(ErrorKind::InvalidArgument, "K must be positive");
  if (K > M) {
    std::ostringstream os;
    os << "K = " << K << " exceeds the basis dimension M = " << M;
    throw Error(ErrorKind::KTooLarge, os.str());
  }
  SpectralEstimate est;
  auto& diag = est.diagnostics;

  // Step 2: top-K right singular vectors of P.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(mom.P, Eigen::ComputeFullV);
  diag.singular_values = svd.singularValues();
  const double s1 = diag.singular_values[0];
  const int numerical_rank =
      static_cast<int>((diag.singular_values.array() > opt.rank_rel_tol * s1).count());
  if (!(s1 > 0.0) || numerical_rank < K) {
    std::ostringstream os;
    os << "only " << numerical_rank << " singular values of P above " << opt.rank_rel_tol
       << " * sigma_1, need K = " << K;
    throw Error(ErrorKind::KTooLarge, os.str());
  }
  const Eigen::MatrixXd U = svd.matrixV().leftCols(K);

  // Step 3: B(b) = (U^T P U)^{-1} U^T T(., b, .) U.
  const Eigen::MatrixXd W = U.transpose() * mom.P * U;
  diag.cond_whitening = condition_number(W);
  if (!(diag.cond_whitening <= opt.whitening_cond_limit)) {
    std::ostringstream os;
    os << "condition number of U^T P U is " << diag.cond_whitening;
    throw Error(ErrorKind::SingularWhitening, os.str());
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> W_qr(W);
  std::vector<Eigen::MatrixXd> B(M);
  for (int b = 0; b < M; ++b) B[b] = W_qr.solve(U.transpose() * mom.slice(b) * U);

  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    // Step 4: C(k) = sum_b (U Theta)(b, k) B(b).
    Rng rng(seed, static_cast<std::uint64_t>(attempt));
    const Eigen::MatrixXd Theta = haar_orthogonal(K, rng);
    const Eigen::MatrixXd UT = U * Theta;
    std::vector<Eigen::MatrixXd> C(K, Eigen::MatrixXd::Zero(K, K));
    for (int k = 0; k < K; ++k)
      for (int b = 0; b < M; ++b) C[k] += UT(b, k) * B[b];

    // Step 5: diagonalize C(1).
    Eigen::EigenSolver<Eigen::MatrixXd> es(C[0]);
    if (es.info() != Eigen::Success) continue;
    const Eigen::VectorXcd ev = es.eigenvalues();
    double worst = 0.0;
    for (int k = 0; k < K; ++k) {
      const double re = std::abs(ev[k].real()), im = std::abs(ev[k].imag());
      worst = std::max(worst, re > 0.0 ? im / re : (im > 0.0 ? std::numeric_limits<double>::infinity() : 0.0));
    }
    if (worst > opt.imag_rel_tol) {
      ++diag.redraws;
      continue;
    }
    diag.max_imag_ratio = worst;
    std::vector<int> order(K);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return ev[i].real() > ev[j].real(); });
    const Eigen::MatrixXcd vecs = es.eigenvectors();
    Eigen::MatrixXd R(K, K);
    Eigen::VectorXd lambda1(K);
    for (int k = 0; k < K; ++k) {
      R.col(k) = vecs.col(order[k]).real();
      R.col(k).normalize();
      lambda1[k] = ev[order[k]].real();
    }
    diag.cond_eigenvectors = condition_number(R);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> R_qr(R);

    // Step 6: Lambda(k, k') = (R^{-1} C(k) R)(k', k'); O = U Theta Lambda.
    Eigen::MatrixXd Lambda(K, K);
    for (int k = 0; k < K; ++k) Lambda.row(k) = R_qr.solve(C[k] * R).diagonal().transpose();
    if (worst == 0.0) {
      const double scale = std::max(1.0, lambda1.cwiseAbs().maxCoeff()) * std::max(1.0, diag.cond_eigenvectors);
      const double gap = (Lambda.row(0).transpose() - lambda1).cwiseAbs().maxCoeff();
      if (gap > 1e-8 * scale) {
        std::ostringstream os;
        os << "diagonal of R^{-1} C(1) R differs from the eigenvalues by " << gap;
        throw Error(ErrorKind::NonRealDiagonalization, os.str());
      }
    }
    // Step 7.
    est.O = UT * Lambda;

    // Step 8: pi_tilde = (U^T O)^{-1} U^T L.
    const Eigen::MatrixXd UO = U.transpose() * est.O;
    diag.cond_UO = condition_number(UO);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> UO_qr(UO);
    est.pi_tilde = UO_qr.solve(U.transpose() * mom.L);

    // Step 9: Q = proj((U^T O diag(pi_tilde))^{-1} U^T N U (O^T U)^{-1}).
    const Eigen::MatrixXd lhs = UO * est.pi_tilde.asDiagonal();
    const Eigen::MatrixXd inner = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(lhs).solve(U.transpose() * mom.N * U);
    // X (O^T U)^{-1} = ((U^T O)^{-1} X^T)^T.
    const Eigen::MatrixXd raw = UO_qr.solve(inner.transpose()).transpose();
    est.Q = project_transition(raw);
    est.pi = stationary(TransitionMatrix(est.Q, 1e-9), ErgodicCheck::UniqueStationary);
    return est;
  }
  std::ostringstream os;
  os << "C(1) had complex eigenvalues for " << opt.max_attempts << " draws of Theta";
  throw Error(ErrorKind::NonRealDiagonalization, os.str());
}

}  // namespace nphmm
