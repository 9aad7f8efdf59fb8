#include "nphmm/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nphmm/error.hpp"

namespace nphmm::quadrature {

namespace {

constexpr int kNodes = 64;

struct Table {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> w{};

  Table() {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    const int n = kNodes;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

}  // namespace

const Rule& gauss_legendre_64() {
  static const Table table;
  static const Rule rule{table.x, table.w};
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels) {
  const Rule& rule = gauss_legendre_64();
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int start_panels, int max_panels) {
  double prev = integrate(f, a, b, start_panels);
  for (int panels = 2 * start_panels; panels <= max_panels; panels *= 2) {
    const double cur = integrate(f, a, b, panels);
    if (std::abs(cur - prev) <= abs_tol) return cur;
    if (panels * 2 > max_panels) {
      std::ostringstream os;
      os << "no convergence on [" << a << ", " << b << "], achieved error estimate "
         << std::abs(cur - prev);
      throw Error(ErrorKind::QuadratureFailure, os.str());
    }
    prev = cur;
  }
  return prev;
}

}  // namespace nphmm::quadrature
