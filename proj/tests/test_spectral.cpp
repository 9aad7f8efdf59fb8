#include <doctest.h>

#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "nphmm/error.hpp"
#include "nphmm/evaluation.hpp"
#include "nphmm/moments.hpp"
#include "nphmm/spectral.hpp"
#include "support.hpp"

using namespace nphmm;

namespace {

struct Instance {
  JointModel model;
  MomentSet mom;
};

Instance random_instance(Rng& rng, int K, const BasisFamily& b) {
  const Eigen::MatrixXd Q = testing::random_transition(K, rng, 0.05);
  const Eigen::MatrixXd A = testing::random_coefficients(b, K, rng);
  JointModel m = JointModel::from(TransitionMatrix(Q), A, b);
  return {m, population_moments(m)};
}

// Permutation of estimated columns onto true columns, then max abs error.
double aligned_error(const SpectralEstimate& est, const JointModel& m, double* q_err = nullptr, double* pi_err = nullptr) {
  const AlignedComparison al = align(est.O, m.A, est.Q, m.Q);
  double e = 0.0, qe = 0.0, pe = 0.0;
  const int K = m.K();
  for (int k = 0; k < K; ++k) {
    e = std::max(e, (est.O.col(al.perm[k]) - m.A.col(k)).cwiseAbs().maxCoeff());
    pe = std::max(pe, std::abs(est.pi[al.perm[k]] - m.pi[k]));
    for (int l = 0; l < K; ++l) qe = std::max(qe, std::abs(est.Q(al.perm[k], al.perm[l]) - m.Q(k, l)));
  }
  if (q_err) *q_err = qe;
  if (pi_err) *pi_err = pe;
  return e;
}

}  // namespace

TEST_CASE("simplex projection") {
  Eigen::VectorXd v(2);
  v << -0.2, 1.2;
  const Eigen::VectorXd p = project_simplex(v);
  CHECK(p[0] == 0.0);
  CHECK(p[1] == doctest::Approx(1.0));
  Eigen::MatrixXd Q(2, 2);
  Q << 0.3, 0.7, 0.9, 0.1;
  CHECK((project_transition(Q) - Q).cwiseAbs().maxCoeff() < 1e-15);

  // Nearest point: no random simplex point is closer.
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::VectorXd x(4);
    for (int i = 0; i < 4; ++i) x[i] = 2.0 * rng.normal();
    const Eigen::VectorXd px = project_simplex(x);
    CHECK(std::abs(px.sum() - 1.0) < 1e-12);
    CHECK(px.minCoeff() >= 0.0);
    const double d = (x - px).squaredNorm();
    for (int k = 0; k < 200; ++k) {
      Eigen::VectorXd s(4);
      for (int i = 0; i < 4; ++i) s[i] = rng.gamma(1.0);
      s /= s.sum();
      CHECK(d <= (x - s).squaredNorm() + 1e-12);
    }
  }
}

TEST_CASE("Haar orthogonal matrices") {
  Rng rng(1);
  const Eigen::MatrixXd one = haar_orthogonal(1, rng);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-15);
  for (int K = 2; K <= 6; ++K) {
    const Eigen::MatrixXd T = haar_orthogonal(K, rng);
    CHECK((T.transpose() * T - Eigen::MatrixXd::Identity(K, K)).cwiseAbs().maxCoeff() <= 1e-12);
  }
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(3, 3);
  const int n = 10000;
  for (int i = 0; i < n; ++i) sum += haar_orthogonal(3, rng);
  CHECK((sum / n).cwiseAbs().maxCoeff() <= 3.0 / std::sqrt(double(n)));
}

TEST_CASE("noiseless recovery on random models") {
  Rng rng(2);
  int count = 0;
  for (int K = 1; K <= 3; ++K)
    for (int M : {3, 5, 8, 12}) {
      if (M < K) continue;
      for (auto kind : {BasisKind::Histogram, BasisKind::Trigonometric}) {
        if (kind == BasisKind::Trigonometric && M % 2 == 0) continue;
        for (int rep = 0; rep < 3; ++rep) {
          const Instance inst = random_instance(rng, K, BasisFamily{kind, M});
          const SpectralEstimate est = spectral_estimate(inst.mom, K, 1000 + count);
          double qe = 0.0, pe = 0.0;
          CHECK(aligned_error(est, inst.model, &qe, &pe) <= 1e-8);
          CHECK(qe <= 1e-8);
          CHECK(pe <= 1e-8);
          CHECK((est.pi_tilde - est.pi).cwiseAbs().maxCoeff() <= 1e-8);
          ++count;
        }
      }
    }
  CHECK(count >= 50);
}

TEST_CASE("single state") {
  Rng rng(3);
  const auto b = BasisFamily::histogram(5);
  const Instance inst = random_instance(rng, 1, b);
  const SpectralEstimate est = spectral_estimate(inst.mom, 1, 5);
  CHECK(est.Q(0, 0) == 1.0);
  CHECK((est.O - inst.model.A).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("relabeled models give the same joint density") {
  Rng rng(4);
  const auto b = BasisFamily::trigonometric(7);
  const Instance inst = random_instance(rng, 3, b);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 3);
  P(0, 2) = P(1, 0) = P(2, 1) = 1.0;
  const JointModel permuted = JointModel::from(TransitionMatrix(P.transpose() * inst.model.Q * P), inst.model.A * P, b);
  const SpectralEstimate e1 = spectral_estimate(inst.mom, 3, 9);
  const SpectralEstimate e2 = spectral_estimate(population_moments(permuted), 3, 9);
  const JointModel g1{e1.Q, e1.pi, e1.O, b}, g2{e2.Q, e2.pi, e2.O, b};
  for (int i = 0; i < 50; ++i) {
    const double y1 = rng.uniform(), y2 = rng.uniform(), y3 = rng.uniform();
    CHECK(std::abs(joint_density(g1, y1, y2, y3) - joint_density(g2, y1, y2, y3)) <= 1e-8);
  }
}

TEST_CASE("C(k) are simultaneously diagonalized on exact moments") {
  // B(b) = R diag(O(b, .)) R^{-1} with R = (U^T O)^{-T} Q^{-1}; the recovered
  // factors must diagonalize every B(b).
  Rng rng(5);
  const auto b = BasisFamily::histogram(9);
  const Instance inst = random_instance(rng, 3, b);
  const SpectralEstimate est = spectral_estimate(inst.mom, 3, 11);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(inst.mom.P, Eigen::ComputeFullV);
  const Eigen::MatrixXd U = svd.matrixV().leftCols(3);
  const Eigen::MatrixXd W = U.transpose() * inst.mom.P * U;
  const Eigen::MatrixXd X = U.transpose() * est.O;  // U^T O
  const Eigen::MatrixXd R = X.transpose().inverse() * est.Q.inverse();
  for (int bb = 0; bb < 9; ++bb) {
    const Eigen::MatrixXd B = W.inverse() * U.transpose() * inst.mom.slice(bb) * U;
    Eigen::MatrixXd D = R.inverse() * B * R;
    const double diag = D.diagonal().cwiseAbs().maxCoeff();
    D.diagonal().setZero();
    CHECK(D.cwiseAbs().maxCoeff() <= 1e-6 * std::max(1.0, diag));
  }
}

TEST_CASE("spectral error conditions") {
  Rng rng(6);
  const Instance inst = random_instance(rng, 2, BasisFamily::histogram(4));
  CHECK_THROWS_AS(spectral_estimate(inst.mom, 5, 1), Error);
  try {
    spectral_estimate(inst.mom, 3, 1);
    FAIL("expected KTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KTooLarge);
  }
  try {
    spectral_estimate(MomentSet::zeros(4), 1, 1);
    FAIL("expected KTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KTooLarge);
  }
}

TEST_CASE("estimates are deterministic in the seed") {
  Rng rng(7);
  const Instance inst = random_instance(rng, 2, BasisFamily::histogram(6));
  const SpectralEstimate a = spectral_estimate(inst.mom, 2, 17), b = spectral_estimate(inst.mom, 2, 17);
  CHECK(a.O == b.O);
  CHECK(a.Q == b.Q);
}
