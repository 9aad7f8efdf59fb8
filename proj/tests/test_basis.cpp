#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>

#include "nphmm/basis.hpp"
#include "nphmm/error.hpp"
#include "nphmm/quadrature.hpp"
#include "nphmm/rng.hpp"
#include "support.hpp"

using namespace nphmm;

TEST_CASE("basis values at known points") {
  CHECK(evaluate_basis(BasisFamily::histogram(4), 1, 0.3) == doctest::Approx(2.0));
  CHECK(evaluate_basis(BasisFamily::histogram(4), 0, 0.3) == 0.0);
  CHECK(evaluate_basis(BasisFamily::histogram(4), 3, 1.0) == doctest::Approx(2.0));
  CHECK(evaluate_basis(BasisFamily::trigonometric(3), 0, 0.7) == 1.0);
  CHECK(std::abs(evaluate_basis(BasisFamily::trigonometric(3), 1, 0.25)) < 1e-15);
  CHECK(evaluate_basis(BasisFamily::trigonometric(3), 2, 0.25) == doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("basis argument checks") {
  const auto h = BasisFamily::histogram(4);
  CHECK_THROWS_AS(evaluate_basis(h, 4, 0.5), Error);
  CHECK_THROWS_AS(evaluate_basis(h, -1, 0.5), Error);
  CHECK_THROWS_AS(evaluate_basis(h, 0, 1.5), Error);
  CHECK_THROWS_AS(evaluate_basis(h, 0, -0.1), Error);
  CHECK_THROWS_AS(BasisFamily::trigonometric(4), Error);
  CHECK_THROWS_AS(BasisFamily::histogram(0), Error);
}

TEST_CASE("evaluate_all agrees with evaluate_basis") {
  Rng rng(3);
  for (auto b : {BasisFamily::histogram(7), BasisFamily::trigonometric(21)}) {
    for (int i = 0; i < 50; ++i) {
      const double y = rng.uniform();
      const Eigen::VectorXd v = evaluate_all(b, y);
      for (int m = 0; m < b.M; ++m) CHECK(std::abs(v[m] - evaluate_basis(b, m, y)) < 1e-12);
    }
  }
}

TEST_CASE("orthonormality up to M = 32") {
  for (int M = 1; M <= 32; ++M) {
    std::vector<BasisFamily> fams{BasisFamily::histogram(M)};
    if (M % 2 == 1) fams.push_back(BasisFamily::trigonometric(M));
    for (const auto& b : fams) {
      const auto pts = breakpoints(b);
      for (int m = 0; m < M; ++m)
        for (int mp = m; mp < M; ++mp) {
          double s = 0.0;
          for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            s += quadrature::integrate(
                [&](double y) { return evaluate_basis(b, m, y) * evaluate_basis(b, mp, y); }, pts[i], pts[i + 1],
                b.kind == BasisKind::Histogram ? 1 : 64);
          CHECK(std::abs(s - (m == mp ? 1.0 : 0.0)) <= 1e-8);
        }
    }
  }
}

TEST_CASE("projection of the uniform density") {
  const auto u = DensityFn::beta(1.0, 1.0);
  const Eigen::VectorXd h = project(u, BasisFamily::histogram(9));
  for (int m = 0; m < 9; ++m) CHECK(h[m] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const Eigen::VectorXd t = project(u, BasisFamily::trigonometric(5));
  CHECK(t[0] == doctest::Approx(1.0));
  for (int m = 1; m < 5; ++m) CHECK(std::abs(t[m]) < 1e-12);
}

TEST_CASE("histogram projection of Beta(2,5) matches bin probabilities from the CDF") {
  const auto f = DensityFn::beta(2.0, 5.0);
  const int M = 16;
  const Eigen::VectorXd a = project(f, BasisFamily::histogram(M));
  for (int m = 0; m < M; ++m) {
    const double p = boost::math::ibeta(2.0, 5.0, (m + 1.0) / M) - boost::math::ibeta(2.0, 5.0, double(m) / M);
    CHECK(std::abs(a[m] - std::sqrt(double(M)) * p) < 1e-12);
  }
}

TEST_CASE("densities integrate to one") {
  for (auto [a, b] : {std::pair{2.0, 5.0}, {4.0, 2.0}, {1.5, 5.0}, {6.0, 6.0}, {7.0, 2.0}}) {
    const auto f = DensityFn::beta(a, b);
    CHECK(std::abs(quadrature::integrate([&](double y) { return f(y); }, 0.0, 1.0) - 1.0) < 1e-6);
  }
}

TEST_CASE("inner products of coefficient vectors") {
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(8, 0), e2 = Eigen::VectorXd::Unit(8, 1);
  CHECK(inner_product(e1, e1) == 1.0);
  CHECK(inner_product(e1, e2) == 0.0);
  CHECK_THROWS_AS(inner_product(e1, Eigen::VectorXd::Zero(3)), Error);
  Rng rng(11);
  for (auto b : {BasisFamily::histogram(8), BasisFamily::trigonometric(7)}) {
    Eigen::VectorXd a1(b.M), a2(b.M);
    for (int m = 0; m < b.M; ++m) {
      a1[m] = rng.normal();
      a2[m] = rng.normal();
    }
    const auto pts = breakpoints(b);
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      s += quadrature::integrate([&](double y) { return evaluate_expansion(b, a1, y) * evaluate_expansion(b, a2, y); },
                                 pts[i], pts[i + 1], 32);
    CHECK(std::abs(inner_product(a1, a2) - s) < 1e-8);
  }
}

TEST_CASE("Parseval at truncation and trigonometric nesting") {
  for (auto [a, bb] : {std::pair{2.0, 5.0}, {4.0, 2.0}, {1.5, 5.0}}) {
    const auto f = DensityFn::beta(a, bb);
    const double norm = l2_norm_sq(f);
    for (int M : {3, 9, 17}) {
      CHECK(project(f, BasisFamily::trigonometric(M)).squaredNorm() <= norm + 1e-10);
      CHECK(project(f, BasisFamily::histogram(M)).squaredNorm() <= norm + 1e-10);
    }
    const Eigen::VectorXd c5 = project(f, BasisFamily::trigonometric(5));
    const Eigen::VectorXd c9 = project(f, BasisFamily::trigonometric(9));
    CHECK((c9.head(5) - c5).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Beta norms against the closed form") {
  // ||Beta(a,b)||^2 = B(2a-1, 2b-1) / B(a,b)^2.
  for (auto [a, b] : {std::pair{2.0, 5.0}, {4.0, 2.0}, {1.5, 5.0}, {6.0, 6.0}}) {
    const double exact = boost::math::beta(2 * a - 1, 2 * b - 1) / std::pow(boost::math::beta(a, b), 2);
    CHECK(testing::rel_err(l2_norm_sq(DensityFn::beta(a, b)), exact) < 1e-8);
  }
}

TEST_CASE("gram matrix of beta densities") {
  const std::vector<DensityFn> fs{DensityFn::beta(2, 5), DensityFn::beta(4, 2)};
  const Eigen::MatrixXd G = gram_matrix(fs);
  // <Beta(a1,b1), Beta(a2,b2)> = B(a1+a2-1, b1+b2-1) / (B(a1,b1) B(a2,b2)).
  const double cross = boost::math::beta(5.0, 6.0) / (boost::math::beta(2.0, 5.0) * boost::math::beta(4.0, 2.0));
  CHECK(testing::rel_err(G(0, 1), cross) < 1e-8);
  CHECK(G(0, 1) == G(1, 0));
}

TEST_CASE("eta3 for histograms matches a brute-force search over bin triples") {
  CHECK(eta3(BasisFamily::histogram(1)) == 0.0);
  for (int M : {2, 3, 4}) {
    const auto b = BasisFamily::histogram(M);
    std::vector<Eigen::VectorXd> phi;
    for (int m = 0; m < M; ++m) phi.push_back(evaluate_all(b, (m + 0.5) / M));
    const int n3 = M * M * M;
    double best = 0.0;
    // Bin relabeling is a symmetry, so a few first triples suffice.
    for (int i = 0; i < std::min(n3, 8); ++i)
      for (int j = 0; j < n3; ++j) {
        const auto &u1 = phi[i % M], &u2 = phi[(i / M) % M], &u3 = phi[i / (M * M)];
        const auto &v1 = phi[j % M], &v2 = phi[(j / M) % M], &v3 = phi[j / (M * M)];
        double s = 0.0;
        for (int a = 0; a < M; ++a)
          for (int bb = 0; bb < M; ++bb)
            for (int c = 0; c < M; ++c) {
              const double e = u1[a] * u2[bb] * u3[c] - v1[a] * v2[bb] * v3[c];
              s += e * e;
            }
        best = std::max(best, s);
      }
    CHECK(eta3(b) == doctest::Approx(std::sqrt(best)).epsilon(1e-12));
  }
  CHECK(eta3(BasisFamily::histogram(4)) == doctest::Approx(11.313708498984761));
}

TEST_CASE("eta3 for the trigonometric family") {
  // For M = 3 the kernel sum_a phi_a(y) phi_a(y') = 1 + 2 cos(2 pi (y - y'))
  // has minimum -1, so the sup is 2 * 27 + 2 * 9 = 72.
  const double e = eta3(BasisFamily::trigonometric(3));
  CHECK(e == doctest::Approx(std::sqrt(72.0)).epsilon(1e-9));
  CHECK(e <= 2.0 * std::pow(3.0, 1.5));
  // Direct evaluation of the defining sum at the maximizing configuration.
  const auto b = BasisFamily::trigonometric(3);
  const Eigen::VectorXd p0 = evaluate_all(b, 0.0), p1 = evaluate_all(b, 0.5);
  double direct = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int bb = 0; bb < 3; ++bb)
      for (int c = 0; c < 3; ++c) direct += std::pow(p0[a] * p0[bb] * p0[c] - p1[a] * p0[bb] * p0[c], 2);
  CHECK(direct == doctest::Approx(72.0));
  for (int M : {5, 9, 15}) CHECK(eta3(BasisFamily::trigonometric(M)) <= 2.0 * std::pow(double(M), 1.5));
}
