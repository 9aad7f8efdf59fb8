#include "nphmm/basis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nphmm/error.hpp"
#include "nphmm/quadrature.hpp"

namespace nphmm {

BasisFamily BasisFamily::histogram(int M) {
  BasisFamily b{BasisKind::Histogram, M};
  validate(b);
  return b;
}

BasisFamily BasisFamily::trigonometric(int M) {
  BasisFamily b{BasisKind::Trigonometric, M};
  validate(b);
  return b;
}

std::string to_string(BasisKind kind) {
  return kind == BasisKind::Histogram ? "histogram" : "trig";
}

BasisKind basis_kind_from_string(const std::string& name) {
  if (name == "histogram" || name == "hist") return BasisKind::Histogram;
  if (name == "trig" || name == "trigonometric") return BasisKind::Trigonometric;
  throw Error(ErrorKind::InvalidArgument, "unknown basis kind '" + name + "'");
}

void validate(const BasisFamily& b) {
  if (b.M < 1) throw Error(ErrorKind::InvalidArgument, "basis dimension must be positive");
  if (b.kind == BasisKind::Trigonometric && b.M % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "trigonometric basis needs odd M");
}

double evaluate_basis(const BasisFamily& b, int m, double y) {
  if (m < 0 || m >= b.M) {
    std::ostringstream os;
    os << "basis index " << m << " outside [0, " << b.M << ")";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  if (!(y >= 0.0 && y <= 1.0)) throw Error(ErrorKind::DomainError, "y outside [0, 1]");
  if (b.kind == BasisKind::Histogram) return histogram_bin(b.M, y) == m ? std::sqrt(double(b.M)) : 0.0;
  if (m == 0) return 1.0;
  const int j = (m + 1) / 2;
  const double arg = 2.0 * std::numbers::pi * j * y;
  return std::numbers::sqrt2 * (m % 2 == 1 ? std::cos(arg) : std::sin(arg));
}

void evaluate_all(const BasisFamily& b, double y, Eigen::Ref<Eigen::VectorXd> out) {
  if (b.kind == BasisKind::Histogram) {
    out.setZero();
    out[histogram_bin(b.M, y)] = std::sqrt(double(b.M));
    return;
  }
  out[0] = 1.0;
  const int r = (b.M - 1) / 2;
  if (r == 0) return;
  // Angle-addition recurrence; drift is ~r ulp, far below the tolerances used.
  const double c1 = std::cos(2.0 * std::numbers::pi * y);
  const double s1 = std::sin(2.0 * std::numbers::pi * y);
  double c = c1, s = s1;
  for (int j = 1; j <= r; ++j) {
    out[2 * j - 1] = std::numbers::sqrt2 * c;
    out[2 * j] = std::numbers::sqrt2 * s;
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
}

Eigen::VectorXd evaluate_all(const BasisFamily& b, double y) {
  Eigen::VectorXd out(b.M);
  evaluate_all(b, y, out);
  return out;
}

Eigen::VectorXd integral_coefficients(const BasisFamily& b) {
  if (b.kind == BasisKind::Histogram) return Eigen::VectorXd::Constant(b.M, 1.0 / std::sqrt(double(b.M)));
  return Eigen::VectorXd::Unit(b.M, 0);
}

std::vector<double> breakpoints(const BasisFamily& b) {
  if (b.kind == BasisKind::Trigonometric) return {0.0, 1.0};
  std::vector<double> pts(b.M + 1);
  for (int m = 0; m <= b.M; ++m) pts[m] = double(m) / b.M;
  return pts;
}

double evaluate_expansion(const BasisFamily& b, const Eigen::Ref<const Eigen::VectorXd>& a, double y) {
  if (a.size() != b.M) throw Error(ErrorKind::InvalidArgument, "coefficient length differs from M");
  if (b.kind == BasisKind::Histogram) return std::sqrt(double(b.M)) * a[histogram_bin(b.M, y)];
  Eigen::VectorXd phi(b.M);
  evaluate_all(b, y, phi);
  return a.dot(phi);
}

DensityFn DensityFn::beta(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0)) throw Error(ErrorKind::InvalidArgument, "beta parameters must be positive");
  const double log_norm = std::lgamma(alpha + beta) - std::lgamma(alpha) - std::lgamma(beta);
  auto fn = [alpha, beta, log_norm](double y) {
    if (y <= 0.0 || y >= 1.0) {
      // Limits at the endpoints; only finite cases matter for quadrature.
      const double e = y <= 0.0 ? alpha : beta;
      if (e > 1.0) return 0.0;
      if (e == 1.0) return std::exp(log_norm);
      return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_norm + (alpha - 1.0) * std::log(y) + (beta - 1.0) * std::log1p(-y));
  };
  return DensityFn(fn, Beta{alpha, beta});
}

DensityFn DensityFn::expansion(const BasisFamily& b, Eigen::VectorXd coefficients) {
  validate(b);
  if (coefficients.size() != b.M) throw Error(ErrorKind::InvalidArgument, "coefficient length differs from M");
  auto fn = [b, a = coefficients](double y) { return evaluate_expansion(b, a, y); };
  return DensityFn(fn, Expansion{b, std::move(coefficients)});
}

DensityFn DensityFn::custom(std::function<double(double)> fn, std::string name) {
  return DensityFn(std::move(fn), Custom{std::move(name)});
}

std::vector<double> DensityFn::breakpoints() const {
  if (const auto* e = std::get_if<Expansion>(&descriptor_)) return nphmm::breakpoints(e->basis);
  return {0.0, 1.0};
}

namespace {

std::vector<double> merged_breakpoints(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end(), [](double x, double y) { return std::abs(x - y) < 1e-15; }),
          a.end());
  return a;
}

// Integrate over [0,1] split at `pts`, keeping the total panel count near the
// default while giving every piece at least a few panels.
double integrate_pieces(const std::function<double(double)>& fn, const std::vector<double>& pts) {
  const int pieces = static_cast<int>(pts.size()) - 1;
  const int panels = std::max(4, quadrature::kDefaultPanels / std::max(1, pieces));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) total += quadrature::integrate(fn, pts[i], pts[i + 1], panels);
  return total;
}

}  // namespace

double integrate_against(const DensityFn& f, const BasisFamily& b, const std::function<double(double)>& fn) {
  return integrate_pieces(fn, merged_breakpoints(f.breakpoints(), breakpoints(b)));
}

Eigen::VectorXd project(const DensityFn& f, const BasisFamily& b) {
  validate(b);
  Eigen::VectorXd out(b.M);
  if (b.kind == BasisKind::Histogram) {
    const double scale = std::sqrt(double(b.M));
    const int panels = std::max(16, quadrature::kDefaultPanels * 4 / b.M);
    for (int m = 0; m < b.M; ++m) {
      // Split each bin at any breakpoint of f that falls inside it.
      std::vector<double> pts{double(m) / b.M, double(m + 1) / b.M};
      for (double p : f.breakpoints())
        if (p > pts.front() && p < pts.back()) pts.push_back(p);
      std::sort(pts.begin(), pts.end());
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        s += quadrature::integrate([&f](double y) { return f(y); }, pts[i], pts[i + 1], panels);
      out[m] = scale * s;
    }
    return out;
  }
  const auto pts = merged_breakpoints(f.breakpoints(), breakpoints(b));
  // One pass over the nodes evaluating all basis functions at once.
  const quadrature::Rule& rule = quadrature::gauss_legendre_64();
  const int pieces = static_cast<int>(pts.size()) - 1;
  const int panels = std::max(4, quadrature::kDefaultPanels / pieces);
  out.setZero();
  Eigen::VectorXd phi(b.M);
  for (int i = 0; i < pieces; ++i) {
    const double h = (pts[i + 1] - pts[i]) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = pts[i] + (p + 0.5) * h;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double y = mid + 0.5 * h * rule.nodes[q];
        evaluate_all(b, y, phi);
        out.noalias() += (0.5 * h * rule.weights[q] * f(y)) * phi;
      }
    }
  }
  return out;
}

double inner_product(const Eigen::Ref<const Eigen::VectorXd>& a1, const Eigen::Ref<const Eigen::VectorXd>& a2) {
  if (a1.size() != a2.size()) throw Error(ErrorKind::InvalidArgument, "coefficient length mismatch");
  return a1.dot(a2);
}

double l2_norm_sq(const DensityFn& f) {
  return integrate_pieces([&f](double y) { double v = f(y); return v * v; }, f.breakpoints());
}

Eigen::MatrixXd gram_matrix(const std::vector<DensityFn>& fs) {
  const int K = static_cast<int>(fs.size());
  Eigen::MatrixXd G(K, K);
  for (int i = 0; i < K; ++i)
    for (int j = i; j < K; ++j) {
      const auto pts = merged_breakpoints(fs[i].breakpoints(), fs[j].breakpoints());
      G(i, j) = G(j, i) = integrate_pieces([&](double y) { return fs[i](y) * fs[j](y); }, pts);
    }
  return G;
}

double eta3(const BasisFamily& b, int grid) {
  validate(b);
  if (b.kind == BasisKind::Histogram) {
    if (b.M == 1) return 0.0;
    return std::numbers::sqrt2 * std::pow(double(b.M), 1.5);
  }
  // sum_{abc} (prod phi(y) - prod phi(y'))^2 = prod s(y_i) + prod s(y'_i) - 2 prod k(y_i, y'_i)
  // with s(y) = |phi(y)|^2 and k(y, y') = <phi(y), phi(y')>. Enumerate the
  // per-coordinate triples (s, s', k) on the grid, deduplicate, then search
  // over choices of three triples.
  std::vector<Eigen::VectorXd> phis;
  for (int i = 0; i < grid; ++i) phis.push_back(evaluate_all(b, (i + 0.5) / grid));
  std::vector<std::array<double, 3>> cand;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      cand.push_back({phis[i].squaredNorm(), phis[j].squaredNorm(), phis[i].dot(phis[j])});
  const double q = 1e-9 * b.M;
  for (auto& c : cand)
    for (double& v : c) v = std::round(v / q) * q;
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  double best = 0.0;
  const std::size_t n = cand.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = j; l < n; ++l) {
        const auto &u = cand[i], &v = cand[j], &w = cand[l];
        const double val = u[0] * v[0] * w[0] + u[1] * v[1] * w[1] - 2.0 * u[2] * v[2] * w[2];
        best = std::max(best, val);
      }
  return std::sqrt(best);
}

}  // namespace nphmm
