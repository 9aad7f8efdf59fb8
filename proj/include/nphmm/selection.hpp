#ifndef NPHMM_SELECTION_HPP
#define NPHMM_SELECTION_HPP

#include <string>
#include <vector>

namespace nphmm {

/// Minimum contrast per model dimension.
struct SelectionTrace {
  long N = 0;
  std::vector<int> M;
  std::vector<double> gamma;

  /// Throws unless M is strictly increasing, sizes match and gamma is finite.
  void validate() const;
};

enum class CalibrationMethod { DimensionJump, SlopeFit };

std::string to_string(CalibrationMethod m);
CalibrationMethod calibration_method_from_string(const std::string& name);

struct CalibrationResult {
  double rho_hat = 0.0;
  int M_hat = 0;
  CalibrationMethod method = CalibrationMethod::DimensionJump;
  // Dimension jump.
  double rho_jump = 0.0;
  int jump_size = 0;
  // Slope fit.
  int window_lo = 0;
  int window_hi = 0;
  double slope = 0.0;
  double r_squared = 0.0;
};

/// rho M log(N) / N.
double penalty(long N, int M, double rho);

/// argmin over the trace of gamma_M + penalty(N, M, rho); ties go to the
/// smaller M. Returns the M value.
int select_M(const SelectionTrace& trace, double rho);

/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);
/// 200 points in [1e-3, 10].
std::vector<double> default_rho_grid();

/// rho_jump is the first grid point after the largest decrease of
/// rho -> select_M(trace, rho); rho_hat = 2 rho_jump. Throws NoJump when
/// select_M is constant on the grid.
CalibrationResult calibrate_dimension_jump(const SelectionTrace& trace, const std::vector<double>& rho_grid);

/// Least-squares line through the trace points with M in [M_lo, M_hi];
/// rho_hat = 2 |slope| N / log N. Throws CalibrationFailed for fewer than 4
/// points or a positive slope.
CalibrationResult calibrate_slope_fit(const SelectionTrace& trace, int M_lo, int M_hi);

/// Window starting at the upper half of the trace, dropping the smallest M
/// until R^2 >= 0.99 with at least 4 points; when no such window exists the
/// full upper half is used.
CalibrationResult calibrate_slope_fit(const SelectionTrace& trace);

/// min(50, floor(sqrt(N / log N))).
int default_M_max(long N);

}  // namespace nphmm

#endif  // NPHMM_SELECTION_HPP
