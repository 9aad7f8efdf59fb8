// Shared generators and brute-force oracles for the unit and acceptance tests.
#ifndef NPHMM_TESTS_SUPPORT_HPP
#define NPHMM_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "nphmm/basis.hpp"
#include "nphmm/hmm_model.hpp"
#include "nphmm/rng.hpp"

namespace nphmm::testing {

// Rows drawn from a flat Dirichlet, mixed with the uniform row so every entry
// is at least `floor`.
inline Eigen::MatrixXd random_transition(int K, Rng& rng, double floor = 0.02) {
  Eigen::MatrixXd Q(K, K);
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) Q(i, j) = rng.gamma(1.0);
    Q.row(i) /= Q.row(i).sum();
    Q.row(i) = (1.0 - K * floor) * Q.row(i).array() + floor;
  }
  return Q;
}

// Valid densities on the basis: histogram heights from a Dirichlet draw;
// trigonometric coefficients decaying from the constant term.
inline Eigen::MatrixXd random_coefficients(const BasisFamily& b, int K, Rng& rng) {
  Eigen::MatrixXd A(b.M, K);
  for (int k = 0; k < K; ++k) {
    if (b.kind == BasisKind::Histogram) {
      Eigen::VectorXd w(b.M);
      for (int m = 0; m < b.M; ++m) w[m] = rng.gamma(1.0);
      A.col(k) = w / w.sum() * std::sqrt(double(b.M));
    } else {
      A(0, k) = 1.0;
      for (int m = 1; m < b.M; ++m) A(m, k) = 0.5 * rng.normal() / ((m + 1) / 2);
    }
  }
  return A;
}

// The defining triple sum, written out without any of the library's
// contractions.
inline double brute_joint_density(const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi, const Eigen::MatrixXd& A,
                                  const BasisFamily& b, double y1, double y2, double y3) {
  const int K = static_cast<int>(Q.rows());
  auto f = [&](int k, double y) {
    double s = 0.0;
    for (int m = 0; m < b.M; ++m) s += A(m, k) * evaluate_basis(b, m, y);
    return s;
  };
  double g = 0.0;
  for (int k1 = 0; k1 < K; ++k1)
    for (int k2 = 0; k2 < K; ++k2)
      for (int k3 = 0; k3 < K; ++k3) g += pi[k1] * Q(k1, k2) * Q(k2, k3) * f(k1, y1) * f(k2, y2) * f(k3, y3);
  return g;
}

// A rule on [0, 1] exact for the integrands used with it: one midpoint per
// histogram bin (piecewise constants), or a uniform grid of n points for
// trigonometric polynomials of degree below n.
struct Rule1D {
  std::vector<double> x, w;
};

inline Rule1D exact_rule(const BasisFamily& b, int trig_points = 32) {
  Rule1D r;
  const int n = b.kind == BasisKind::Histogram ? b.M : trig_points;
  for (int i = 0; i < n; ++i) {
    r.x.push_back((i + 0.5) / n);
    r.w.push_back(1.0 / n);
  }
  return r;
}

inline double tensor_quadrature(const Rule1D& r, const std::function<double(double, double, double)>& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i)
    for (std::size_t j = 0; j < r.x.size(); ++j)
      for (std::size_t k = 0; k < r.x.size(); ++k) s += r.w[i] * r.w[j] * r.w[k] * g(r.x[i], r.x[j], r.x[k]);
  return s;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace nphmm::testing

#endif  // NPHMM_TESTS_SUPPORT_HPP
