#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>

#include <Eigen/Dense>

#include "nphmm/error.hpp"
#include "nphmm/hd_assumption.hpp"
#include "nphmm/hmm_model.hpp"
#include "support.hpp"

using namespace nphmm;

namespace {

Eigen::MatrixXd zero_row_sum(int K, Rng& rng) {
  Eigen::MatrixXd U(K, K);
  for (int i = 0; i < U.size(); ++i) U.data()[i] = rng.normal();
  return U.colwise() - U.rowwise().mean();
}

// Gram matrix of K random vectors of dimension m (coefficients over an
// orthonormal family).
Eigen::MatrixXd random_gram(int K, int m, Rng& rng) {
  Eigen::MatrixXd F(m, K);
  for (int i = 0; i < F.size(); ++i) F.data()[i] = rng.normal();
  return F.transpose() * F;
}

// sum_k w(k) F(:,k1) x F(:,k2) x F(:,k3), flattened, by explicit loops.
Eigen::VectorXd triple_tensor(const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi, const Eigen::MatrixXd& F) {
  const int K = int(Q.rows()), m = int(F.rows());
  Eigen::VectorXd T = Eigen::VectorXd::Zero(m * m * m);
  for (int k1 = 0; k1 < K; ++k1)
    for (int k2 = 0; k2 < K; ++k2)
      for (int k3 = 0; k3 < K; ++k3) {
        const double w = pi[k1] * Q(k1, k2) * Q(k2, k3);
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) T[a + m * (b + m * c)] += w * F(a, k1) * F(b, k2) * F(c, k3);
      }
  return T;
}

Eigen::Matrix2d two_state(double p, double q) {
  Eigen::Matrix2d Q;
  Q << 1.0 - p, p, q, 1.0 - q;
  return Q;
}

Eigen::Matrix2d gram2(double n1, double n2, double a) {
  Eigen::Matrix2d G;
  G << n1 * n1, a * n1 * n2, a * n1 * n2, n2 * n2;
  return G;
}

}  // namespace

TEST_CASE("quadratic form basics") {
  Rng rng(1);
  for (int K : {2, 3, 4}) {
    const Eigen::MatrixXd Q = testing::random_transition(K, rng);
    const Eigen::MatrixXd G = random_gram(K, 6, rng);
    CHECK(quadratic_form_D(Q, G, Eigen::MatrixXd::Zero(K, K)) == 0.0);
    const Eigen::MatrixXd U = zero_row_sum(K, rng);
    const double lambda = 0.1 + 3.0 * rng.uniform();
    const double d1 = quadratic_form_D(Q, G, U), d2 = quadratic_form_D(Q, G, lambda * U);
    CHECK(std::abs(d2 - lambda * lambda * d1) <= 1e-12 * std::abs(d2));
  }
}

TEST_CASE("quadratic form is the second-order term of the joint norm") {
  // F + eps F U^T moves each emission by sum_j U(k, j) f_j, which integrates
  // to zero when U 1 = 0. The squared L2 distance is the norm of the tensor
  // difference because the coordinates are orthonormal.
  Rng rng(2);
  const double eps = 1e-4;
  for (int K : {2, 3}) {
    for (int rep = 0; rep < 5; ++rep) {
      const int m = 5;
      const Eigen::MatrixXd Q = testing::random_transition(K, rng, 0.05);
      const Eigen::VectorXd pi = stationary(TransitionMatrix(Q));
      Eigen::MatrixXd F(m, K);
      for (int i = 0; i < F.size(); ++i) F.data()[i] = rng.normal();
      const Eigen::MatrixXd U = zero_row_sum(K, rng);
      const Eigen::MatrixXd F2 = F + eps * F * U.transpose();
      const double n = (triple_tensor(Q, pi, F2) - triple_tensor(Q, pi, F)).squaredNorm() / (eps * eps);
      const double d = quadratic_form_D(Q, F.transpose() * F, U);
      CHECK(std::abs(n - d) <= 10.0 * eps * d);
    }
  }
}

TEST_CASE("form is nonnegative") {
  Rng rng(3);
  int n = 0;
  for (int i = 0; i < 10000; ++i) {
    const int K = 2 + i % 3;
    const Eigen::MatrixXd Q = testing::random_transition(K, rng, 0.01);
    const Eigen::MatrixXd G = random_gram(K, K + int(rng.uniform() * 3), rng);
    const Eigen::MatrixXd U = zero_row_sum(K, rng);
    const double scale = std::pow(G.norm(), 3) * U.squaredNorm();
    n += quadratic_form_D(Q, G, U) >= -1e-10 * scale;
  }
  CHECK(n == 10000);
}

TEST_CASE("polarization") {
  Rng rng(4);
  for (int K : {2, 3, 4}) {
    const Eigen::MatrixXd Q = testing::random_transition(K, rng);
    const Eigen::MatrixXd G = random_gram(K, K + 2, rng);
    const Eigen::MatrixXd D = D_matrix(Q, G);
    REQUIRE(D.rows() == K * (K - 1));
    CHECK((D - D.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * D.cwiseAbs().maxCoeff());
    for (int rep = 0; rep < 5; ++rep) {
      Eigen::VectorXd u(K * (K - 1));
      for (int i = 0; i < u.size(); ++i) u[i] = rng.normal();
      Eigen::MatrixXd U = Eigen::MatrixXd::Zero(K, K);
      for (int i = 0; i < K; ++i)
        for (int j = 0; j + 1 < K; ++j) {
          U(i, j) += u[i * (K - 1) + j];
          U(i, K - 1) -= u[i * (K - 1) + j];
        }
      const double d = quadratic_form_D(Q, G, U);
      CHECK(std::abs(u.dot(D * u) - d) <= 1e-10 * std::max(1.0, std::abs(d)));
    }
    const HValue h = determinant_H(Q, G);
    CHECK(h.raw == doctest::Approx(D.determinant()).epsilon(1e-12));
    CHECK(h.scale == doctest::Approx(std::pow(G.norm(), 3 * K * (K - 1))).epsilon(1e-12));
  }
}

TEST_CASE("cleared determinant for two states") {
  // The stationary law of [[1-p, p], [q, 1-q]] has denominator p + q.
  const Eigen::Matrix2d Q = two_state(0.3, 0.45);
  const HValue h = determinant_H(Q, gram2(1.3, 0.8, 0.2));
  CHECK(h.cleared == doctest::Approx(h.raw * std::pow(0.75, 4)).epsilon(1e-12));
}

TEST_CASE("determinant is positive for two states") {
  Rng rng(5);
  int positive = 0, total = 0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 0.01 + 0.98 * rng.uniform(), q = 0.01 + 0.98 * rng.uniform();
    if (std::abs(p + q - 1.0) < 1e-3) continue;
    // Two random densities as histogram heights on 8 bins.
    Eigen::MatrixXd F(8, 2);
    for (int k = 0; k < 2; ++k) {
      for (int m = 0; m < 8; ++m) F(m, k) = rng.gamma(1.0);
      F.col(k) *= std::sqrt(8.0) / F.col(k).sum();
    }
    const HValue h = determinant_H(two_state(p, q), F.transpose() * F);
    ++total;
    positive += h.raw > 0.0;
  }
  CHECK(total > 990);
  CHECK(positive == total);
}

TEST_CASE("degenerate two-state instances") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const double p = 0.05 + 0.9 * rng.uniform(), q = 0.05 + 0.9 * rng.uniform();
    const double n = 0.5 + rng.uniform();
    // Equal emissions.
    const Eigen::Matrix2d G_same = gram2(n, n, 1.0);
    const HValue same = determinant_H(two_state(p, q), G_same);
    CHECK(std::abs(same.raw) <= 1e-10 * same.scale);
    // Independent chain.
    const Eigen::Matrix2d G = gram2(n, 0.7, 0.3);
    const HValue iid = determinant_H(two_state(p, 1.0 - p), G);
    CHECK(std::abs(iid.raw) <= 1e-10 * iid.scale);
  }
}

TEST_CASE("explicit two-state coefficients match the generic form") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const double p = 0.01 + 0.98 * rng.uniform(), q = 0.01 + 0.98 * rng.uniform();
    const Eigen::Matrix2d G = random_gram(2, 4, rng);
    const double alpha = rng.normal(), beta = rng.normal();
    Eigen::Matrix2d U;
    U << alpha, -alpha, beta, -beta;
    const double generic = quadratic_form_D(two_state(p, q), G, U);
    const double expl = explicit_K2_D(p, q, G, alpha, beta);
    CHECK(std::abs(expl - generic) <= 1e-9 * std::abs(generic));
  }
  CHECK(explicit_K2_D(0.3, 0.6, gram2(1.0, 1.2, 0.4), 0.0, 0.0) == 0.0);
}

TEST_CASE("swap symmetry of the explicit coefficients") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const double p = 0.05 + 0.9 * rng.uniform(), q = 0.05 + 0.9 * rng.uniform();
    const double n1 = 0.5 + rng.uniform(), n2 = 0.5 + rng.uniform(), a = rng.uniform();
    const K2Coefficients c = explicit_K2_coefficients(p, q, gram2(n1, n2, a));
    const K2Coefficients s = explicit_K2_coefficients(q, p, gram2(n2, n1, a));
    CHECK(c.D11 == doctest::Approx(s.D22).epsilon(1e-10));
    CHECK(c.D22 == doctest::Approx(s.D11).epsilon(1e-10));
    CHECK(c.D12 == doctest::Approx(s.D12).epsilon(1e-10));
    const K2Coefficients e = explicit_K2_coefficients(p, p, gram2(n1, n1, a));
    CHECK(std::abs(e.D11 - e.D22) <= 1e-10 * std::abs(e.D11));
  }
}

TEST_CASE("P5 table") {
  const auto terms = p5_terms();
  CHECK(terms.size() == 843);
  CHECK(p5_checksum() == 0xbab5edc946d12875ULL);
  CHECK(evaluate_P5(0, 0, 0, 0) == 144.0);

  // Exactly three negative monomials, each absorbed by the squares the
  // factorization argument uses.
  std::map<std::tuple<int, int, int, int>, int> coef;
  int negative = 0;
  for (const auto& t : terms) {
    coef[{t.ex, t.ey, t.ez, t.et}] = t.coef;
    negative += t.coef < 0;
  }
  CHECK(negative == 3);
  CHECK(coef[{12, 0, 0, 2}] == -18);
  CHECK(coef[{10, 0, 0, 2}] == -108);
  CHECK(coef[{8, 0, 0, 2}] == -114);
  CHECK(coef[{12, 0, 0, 0}] == 27);
  CHECK(coef[{12, 0, 0, 4}] == 1979);
  CHECK(coef[{8, 0, 0, 0}] >= 495);
  CHECK(coef[{4, 0, 0, 0}] >= 972);
  CHECK(coef[{0, 0, 0, 0}] == 144);
}

TEST_CASE("sum-of-squares rewrites") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const double x = 4.0 * rng.uniform() - 2.0, t = 4.0 * rng.uniform() - 2.0;
    const double x2 = x * x, t2 = t * t;
    const double x4 = x2 * x2, x6 = x4 * x2, x8 = x4 * x4, x10 = x8 * x2, x12 = x6 * x6, t4 = t2 * t2;
    const double l1 = -18 * x12 * t2 + 27 * x12 + 1979 * x12 * t4;
    const double r1 = 18 * x12 + 9 * std::pow(x6 - x6 * t2, 2) + 1970 * x12 * t4;
    const double l2 = -108 * x10 * t2 + 1970 * x12 * t4 + 495 * x8;
    const double r2 = 439 * x8 + 56 * std::pow(x4 - x6 * t2, 2) + 1914 * x12 * t4 + 4 * t2 * x10;
    const double l3 = -114 * x8 * t2 + 972 * x4 + 1914 * x12 * t4;
    const double r3 = 915 * x4 + 57 * std::pow(x2 - x6 * t2, 2) + 1857 * x12 * t4;
    CHECK(std::abs(l1 - r1) <= 1e-9 * std::max(1.0, std::abs(l1)));
    CHECK(std::abs(l2 - r2) <= 1e-9 * std::max(1.0, std::abs(l2)));
    CHECK(std::abs(l3 - r3) <= 1e-9 * std::max(1.0, std::abs(l3)));
  }
}

TEST_CASE("P5 is positive") {
  Rng rng(10);
  int positive = 0;
  for (int i = 0; i < 1000000; ++i) {
    const double x = 20 * rng.uniform() - 10, y = 20 * rng.uniform() - 10, z = 20 * rng.uniform() - 10,
                 t = 20 * rng.uniform() - 10;
    positive += evaluate_P5(x, y, z, t) > 0.0;
  }
  CHECK(positive == 1000000);
}

TEST_CASE("determinant factorization through P5") {
  Rng rng(11);
  double ratio_min = 1e300, ratio_max = -1e300;
  int checked = 0;
  while (checked < 500) {
    const double n1 = 1.0 + 2.0 * rng.uniform();
    const double n2 = n1 * (0.05 + 0.95 * rng.uniform());
    const double a = 0.98 * rng.uniform();
    const double p = 0.02 + 0.96 * rng.uniform();
    const double d = (p - 1.0) + rng.uniform();
    if (std::abs(d) < 1e-3 || d <= p - 1.0 + 1e-3 || d >= p - 1e-3) continue;
    const ChainCheck c = chain_check_K2(n1, n2, a, p, d);
    CHECK(std::abs(c.lhs - c.rhs) <= 1e-6 * std::abs(c.lhs));
    ratio_min = std::min(ratio_min, c.lhs / c.rhs);
    ratio_max = std::max(ratio_max, c.lhs / c.rhs);
    ++checked;
  }
  CHECK(ratio_max - ratio_min <= 1e-6);
}

TEST_CASE("factorization limits") {
  const ChainCheck base = chain_check_K2(1.5, 1.0, 0.4, 0.35, 0.2);
  const ChainCheck small_d = chain_check_K2(1.5, 1.0, 0.4, 0.35, 1e-6);
  CHECK(std::abs(small_d.lhs) <= 1e-9 * std::abs(base.lhs));
  CHECK(std::abs(small_d.rhs) <= 1e-9 * std::abs(base.rhs));
  const ChainCheck near_one = chain_check_K2(1.5, 1.0, 1.0 - 1e-6, 0.35, 0.2);
  CHECK(std::abs(near_one.lhs) <= 1e-5 * std::abs(base.lhs));
  CHECK(std::abs(near_one.rhs) <= 1e-5 * std::abs(base.rhs));
  CHECK_THROWS_AS(chain_check_K2(1.0, 2.0, 0.4, 0.35, 0.2), Error);
  CHECK_THROWS_AS(chain_check_K2(1.0, 0.5, 0.4, 0.35, 0.0), Error);
  CHECK_THROWS_AS(chain_check_K2(1.0, 0.5, 0.4, 0.35, 0.5), Error);
}
