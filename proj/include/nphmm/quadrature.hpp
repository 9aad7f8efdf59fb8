#ifndef NPHMM_QUADRATURE_HPP
#define NPHMM_QUADRATURE_HPP

#include <functional>
#include <span>

namespace nphmm::quadrature {

/// Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

/// The 64-point rule, computed once by Newton iteration on P_64.
const Rule& gauss_legendre_64();

inline constexpr int kDefaultPanels = 256;

/// Composite 64-point Gauss-Legendre over `panels` uniform panels of [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = kDefaultPanels);

/// Adaptive version: doubles the panel count until two successive estimates
/// agree to `abs_tol`. Throws QuadratureFailure with the achieved error if
/// `max_panels` is reached first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, int start_panels = 16,
                          int max_panels = 1 << 14);

}  // namespace nphmm::quadrature

#endif  // NPHMM_QUADRATURE_HPP
