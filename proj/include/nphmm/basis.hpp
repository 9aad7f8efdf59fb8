#ifndef NPHMM_BASIS_HPP
#define NPHMM_BASIS_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace nphmm {

enum class BasisKind { Histogram, Trigonometric };

/// An orthonormal family phi_1..phi_M on [0, 1].
///
/// Functions are addressed with a zero-based index m in [0, M), so index m
/// is phi_{m+1}.
///
///  - Histogram: phi_m(y) = sqrt(M) 1{y in [m/M, (m+1)/M)}; y = 1 is
///    assigned to the last bin.
///  - Trigonometric (M = 2r + 1): phi_0 = 1, phi_{2j-1} = sqrt(2) cos(2 pi j y),
///    phi_{2j} = sqrt(2) sin(2 pi j y) for j = 1..r. The family is nested,
///    so the first M' functions of an M-family form the M'-family.
struct BasisFamily {
  BasisKind kind = BasisKind::Histogram;
  int M = 1;

  static BasisFamily histogram(int M);
  static BasisFamily trigonometric(int M);

  bool operator==(const BasisFamily&) const = default;
};

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string& name);

/// Throws InvalidArgument if M is not positive, or even for Trigonometric.
void validate(const BasisFamily& b);

/// phi_m(y). Throws on m out of range or y outside [0, 1].
double evaluate_basis(const BasisFamily& b, int m, double y);

/// All M values phi_0(y)..phi_{M-1}(y) written into `out` (size M).
/// No range checking; hot path for moment accumulation.
void evaluate_all(const BasisFamily& b, double y, Eigen::Ref<Eigen::VectorXd> out);
Eigen::VectorXd evaluate_all(const BasisFamily& b, double y);

/// Bin containing y for an M-bin histogram.
inline int histogram_bin(int M, double y) {
  const int bin = static_cast<int>(y * M);
  return bin < 0 ? 0 : (bin >= M ? M - 1 : bin);
}

/// c_m = integral of phi_m over [0, 1]. A coefficient vector a represents a
/// function integrating to one iff c^T a = 1.
Eigen::VectorXd integral_coefficients(const BasisFamily& b);

/// Points where basis functions may be discontinuous, including 0 and 1.
std::vector<double> breakpoints(const BasisFamily& b);

/// Evaluate sum_m a_m phi_m(y).
double evaluate_expansion(const BasisFamily& b, const Eigen::Ref<const Eigen::VectorXd>& a,
                          double y);

/// A density on [0, 1], with a descriptor saying where it came from.
class DensityFn {
 public:
  struct Beta {
    double alpha;
    double beta;
  };
  struct Expansion {
    BasisFamily basis;
    Eigen::VectorXd coefficients;
  };
  struct Custom {
    std::string name;
  };
  using Descriptor = std::variant<Beta, Expansion, Custom>;

  static DensityFn beta(double alpha, double beta);
  static DensityFn expansion(const BasisFamily& b, Eigen::VectorXd coefficients);
  static DensityFn custom(std::function<double(double)> fn, std::string name = "custom");

  double operator()(double y) const { return fn_(y); }
  const Descriptor& descriptor() const { return descriptor_; }

  /// Where the density may be non-smooth (panel boundaries for quadrature).
  std::vector<double> breakpoints() const;

 private:
  DensityFn(std::function<double(double)> fn, Descriptor d)
      : fn_(std::move(fn)), descriptor_(std::move(d)) {}

  std::function<double(double)> fn_;
  Descriptor descriptor_;
};

/// Integral of fn over [0, 1] split at the breakpoints of both `f` and `b`.
double integrate_against(const DensityFn& f, const BasisFamily& b,
                         const std::function<double(double)>& fn);

/// (<f, phi_m>)_m by composite Gauss-Legendre quadrature.
Eigen::VectorXd project(const DensityFn& f, const BasisFamily& b);

/// Sum_m a1_m a2_m; the L2 inner product of the expansions by orthonormality.
double inner_product(const Eigen::Ref<const Eigen::VectorXd>& a1,
                     const Eigen::Ref<const Eigen::VectorXd>& a2);

/// ||f||_2^2 by quadrature.
double l2_norm_sq(const DensityFn& f);

/// Gram matrix <f_i, f_j> of a list of densities, by quadrature.
Eigen::MatrixXd gram_matrix(const std::vector<DensityFn>& fs);

/// eta_3(Phi_M): the sup over y, y' in [0,1]^3 of the Euclidean distance
/// between the tensors phi(y1) x phi(y2) x phi(y3) and its primed twin.
/// Exact for histograms (sqrt(2) M^{3/2}, or 0 when M = 1); grid sup with
/// `grid` points per coordinate for the trigonometric family.
double eta3(const BasisFamily& b, int grid = 64);

}  // namespace nphmm

#endif  // NPHMM_BASIS_HPP
