#include "nphmm/hd_assumption.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/LU>

#include "nphmm/error.hpp"
#include "nphmm/hmm_model.hpp"

namespace nphmm {

double quadratic_form_D(const Eigen::MatrixXd& Q, const Eigen::MatrixXd& G, const Eigen::MatrixXd& U) {
  const Eigen::Index K = Q.rows();
  if (Q.cols() != K || G.rows() != K || G.cols() != K || U.rows() != K || U.cols() != K)
    throw Error(ErrorKind::InvalidArgument, "Q, G and U must all be K x K");
  const Eigen::VectorXd pi = stationary(TransitionMatrix(Q, 1e-10), ErgodicCheck::UniqueStationary);
  const auto AQ = pi.asDiagonal();
  const Eigen::MatrixXd QtA = Q.transpose() * AQ;
  const Eigen::MatrixXd AQQ = AQ * Q;
  const Eigen::MatrixXd UG = U * G;
  const Eigen::MatrixXd T1 = QtA * UG * U.transpose() * AQQ;
  const Eigen::MatrixXd T2 = QtA * G * AQQ;
  const Eigen::MatrixXd T3 = QtA * UG * AQQ;
  const Eigen::MatrixXd QGQ = Q * G * Q.transpose();
  const Eigen::MatrixXd UGU = UG * U.transpose();
  const Eigen::MatrixXd QUGUQ = Q * UGU * Q.transpose();
  const Eigen::MatrixXd QUGQ = Q * UG * Q.transpose();

  const double first = (T1.array() * G.array() * QGQ.array()).sum() +
                       (T2.array() * UGU.array() * QGQ.array()).sum() +
                       (T2.array() * G.array() * QUGUQ.array()).sum();
  const Eigen::MatrixXd UGt = UG.transpose();
  const Eigen::MatrixXd QUGQt = QUGQ.transpose();
  const double second = (T3.array() * UGt.array() * QGQ.array()).sum() +
                        (T3.array() * QUGQt.array() * G.array()).sum() +
                        (UG.array() * QUGQt.array() * T2.array()).sum();
  return first + 2.0 * second;
}

Eigen::MatrixXd D_matrix(const Eigen::MatrixXd& Q, const Eigen::MatrixXd& G) {
  const int K = static_cast<int>(Q.rows());
  const int n = K * (K - 1);
  std::vector<Eigen::MatrixXd> basis;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K - 1; ++j) {
      Eigen::MatrixXd E = Eigen::MatrixXd::Zero(K, K);
      E(i, j) = 1.0;
      E(i, K - 1) = -1.0;
      basis.push_back(E);
    }
  Eigen::MatrixXd D(n, n);
  for (int a = 0; a < n; ++a) {
    D(a, a) = quadratic_form_D(Q, G, basis[a]);
    for (int b = a + 1; b < n; ++b)
      D(a, b) = D(b, a) =
          0.25 * (quadratic_form_D(Q, G, basis[a] + basis[b]) - quadratic_form_D(Q, G, basis[a] - basis[b]));
  }
  return D;
}

HValue determinant_H(const Eigen::MatrixXd& Q, const Eigen::MatrixXd& G) {
  const int K = static_cast<int>(Q.rows());
  const int n = K * (K - 1);
  HValue h;
  h.scale = std::pow(G.norm(), 3.0 * n);
  if (n == 0) {
    h.raw = h.cleared = 1.0;
    return h;
  }
  h.raw = D_matrix(Q, G).determinant();
  const Eigen::MatrixXd IQ = Eigen::MatrixXd::Identity(K, K) - Q;
  double S = 0.0;
  for (int k = 0; k < K; ++k) {
    Eigen::MatrixXd sub(K - 1, K - 1);
    for (int i = 0, r = 0; i < K; ++i) {
      if (i == k) continue;
      for (int j = 0, c = 0; j < K; ++j) {
        if (j == k) continue;
        sub(r, c++) = IQ(i, j);
      }
      ++r;
    }
    S += K == 1 ? 1.0 : sub.determinant();
  }
  h.cleared = h.raw * std::pow(S, 2.0 * n);
  return h;
}

K2Coefficients explicit_K2_coefficients(double p, double q, const Eigen::Matrix2d& G) {
  // Work in the basis (f1, f2): f1 = e1, f2 = e2, inner products through G.
  const Eigen::Vector2d f1(1.0, 0.0), f2(0.0, 1.0);
  const Eigen::Vector2d d = f1 - f2;
  const Eigen::Vector2d m1 = (1.0 - p) * f1 + p * f2;
  const Eigen::Vector2d m2 = q * f1 + (1.0 - q) * f2;
  auto ip = [&G](const Eigen::Vector2d& u, const Eigen::Vector2d& v) { return u.dot(G * v); };
  auto nsq = [&ip](const Eigen::Vector2d& u) { return ip(u, u); };
  const double nd = nsq(d), nf1 = nsq(f1), nf2 = nsq(f2), nm1 = nsq(m1), nm2 = nsq(m2);
  const double c = ip(m1, m2), a12 = ip(f1, f2);
  const double m1d = ip(m1, d), m2d = ip(m2, d), f1d = ip(f1, d), f2d = ip(f2, d);
  const double s = (p + q) * (p + q);

  K2Coefficients out;
  out.D11 = (2 * (1 - p) * (1 - p) * nd * nf1 * nm1 + nm1 * nm1 * nd + 4 * p * (1 - p) * c * a12 * nd +
             2 * p * p * nd * nf2 * nm2 + 2 * (1 - p) * (1 - p) * m1d * m1d * nf1 + 2 * p * p * m2d * m2d * nf2 +
             4 * p * (1 - p) * m2d * m1d * a12 + 4 * (1 - p) * m1d * f1d * nm1 + 4 * p * m1d * f2d * c) *
            q * q / s;
  out.D22 = (2 * q * q * nd * nf1 * nm1 + nm2 * nm2 * nd + 4 * (1 - q) * q * c * a12 * nd +
             2 * (1 - q) * (1 - q) * nd * nf2 * nm2 + 2 * q * q * m1d * m1d * nf1 +
             2 * (1 - q) * (1 - q) * m2d * m2d * nf2 + 4 * q * (1 - q) * m2d * m1d * a12 + 4 * q * m2d * f1d * c +
             4 * (1 - q) * m2d * f2d * nm2) *
            p * p / s;
  out.D12 = (2 * (1 - p) * q * nd * nf1 * nm1 + 2 * (p * q + (1 - p) * (1 - q)) * c * a12 * nd + c * c * nd +
             2 * p * (1 - q) * nd * nf2 * nm2 + 2 * q * (1 - p) * m1d * m1d * nf1 +
             2 * p * (1 - q) * m2d * m2d * nf2 + 2 * p * q * m2d * m1d * a12 +
             2 * (1 - p) * (1 - q) * m2d * m1d * a12 + 2 * q * m1d * f1d * nm1 + 2 * (1 - p) * m2d * f1d * c +
             2 * (1 - q) * m1d * f2d * c + 2 * p * m2d * f2d * nm2) *
            p * q / s;
  return out;
}

double explicit_K2_D(double p, double q, const Eigen::Matrix2d& G, double alpha, double beta) {
  const K2Coefficients k = explicit_K2_coefficients(p, q, G);
  return k.D11 * alpha * alpha + 2.0 * k.D12 * alpha * beta + k.D22 * beta * beta;
}

std::uint64_t p5_checksum() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::int32_t v) {
    const auto u = static_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  for (const P5Term& t : p5_terms()) {
    mix(t.ex);
    mix(t.ey);
    mix(t.ez);
    mix(t.et);
    mix(t.coef);
  }
  return h;
}

double evaluate_P5(double x, double y, double z, double t) {
  auto powers = [](double v, int n) {
    std::vector<long double> p(n + 1);
    p[0] = 1.0L;
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * v;
    return p;
  };
  const auto px = powers(x, 16), py = powers(y, 16), pz = powers(z, 16), pt = powers(t, 16);
  long double s = 0.0L;
  for (const P5Term& m : p5_terms()) s += m.coef * px[m.ex] * py[m.ey] * pz[m.ez] * pt[m.et];
  return static_cast<double>(s);
}

ChainCheck chain_check_K2(double n1, double n2, double a, double p, double d) {
  const double b = n2 / n1;
  const bool ok = n1 > 0.0 && n2 > 0.0 && b <= 1.0 && a >= 0.0 && a < 1.0 && p > 0.0 && p < 1.0 &&
                  d > p - 1.0 && d < p && d != 0.0;
  if (!ok) {
    std::ostringstream os;
    os << "chain check point off its domain: n1=" << n1 << " n2=" << n2 << " a=" << a << " p=" << p << " d=" << d;
    throw Error(ErrorKind::DomainError, os.str());
  }
  ChainCheck out;
  out.x = std::sqrt(1.0 / b - 1.0);
  out.y = std::sqrt(a / (1.0 - a));
  out.z = std::sqrt(p / (1.0 - p));
  const double z2 = out.z * out.z;
  const double t2 = (1.0 + d * (1.0 + z2)) / (z2 - d * (1.0 + z2));
  if (!(t2 > 0.0)) throw Error(ErrorKind::DomainError, "no real t for this (p, d)");
  out.t = std::sqrt(t2);

  const double q = 1.0 - p + d;
  Eigen::Matrix2d Q;
  Q << 1.0 - p, p, q, 1.0 - q;
  Eigen::Matrix2d G;
  G << n1 * n1, a * n1 * n2, a * n1 * n2, n2 * n2;
  out.lhs = determinant_H(Q, G).raw;

  const double x2 = out.x * out.x, y2 = out.y * out.y;
  const double factor = p * p * (1.0 - a * a) * d * d * n1 * n1 * n2 * n2 * std::pow(1.0 + d - p, 2) /
                        std::pow(1.0 + d, 4);
  out.rhs = factor * std::pow(n1, 8) * evaluate_P5(out.x, out.y, out.z, out.t) /
            (std::pow(1.0 + t2, 4) * std::pow(1.0 + y2, 4) * std::pow(1.0 + z2, 4) * std::pow(1.0 + x2, 8));
  return out;
}

}  // namespace nphmm
