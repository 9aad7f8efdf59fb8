#include "nphmm/selection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nphmm/error.hpp"

namespace nphmm {

void SelectionTrace::validate() const {
  if (M.empty()) throw Error(ErrorKind::InvalidArgument, "empty selection trace");
  if (M.size() != gamma.size()) throw Error(ErrorKind::InvalidArgument, "trace M and gamma lengths differ");
  if (N < 2) throw Error(ErrorKind::InvalidArgument, "trace needs N >= 2");
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (!std::isfinite(gamma[i])) throw Error(ErrorKind::InvalidArgument, "trace has a non-finite contrast");
    if (i > 0 && M[i] <= M[i - 1]) throw Error(ErrorKind::InvalidArgument, "trace M values must increase");
  }
}

std::string to_string(CalibrationMethod m) { return m == CalibrationMethod::DimensionJump ? "jump" : "slope"; }

CalibrationMethod calibration_method_from_string(const std::string& name) {
  if (name == "jump") return CalibrationMethod::DimensionJump;
  if (name == "slope") return CalibrationMethod::SlopeFit;
  throw Error(ErrorKind::InvalidArgument, "unknown calibration method '" + name + "'");
}

double penalty(long N, int M, double rho) {
  if (N < 2 || M < 1 || !(rho >= 0.0)) throw Error(ErrorKind::InvalidArgument, "penalty needs N >= 2, M >= 1, rho >= 0");
  return rho * M * std::log(double(N)) / double(N);
}

int select_M(const SelectionTrace& trace, double rho) {
  trace.validate();
  std::size_t best = 0;
  double best_val = trace.gamma[0] + penalty(trace.N, trace.M[0], rho);
  for (std::size_t i = 1; i < trace.M.size(); ++i) {
    const double v = trace.gamma[i] + penalty(trace.N, trace.M[i], rho);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  return trace.M[best];
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0 && hi > lo) || n < 2) throw Error(ErrorKind::InvalidArgument, "bad log grid");
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> default_rho_grid() { return log_grid(1e-3, 10.0, 200); }

CalibrationResult calibrate_dimension_jump(const SelectionTrace& trace, const std::vector<double>& rho_grid) {
  trace.validate();
  if (rho_grid.size() < 3) throw Error(ErrorKind::InvalidArgument, "rho grid needs at least 3 points");
  for (std::size_t i = 1; i < rho_grid.size(); ++i)
    if (!(rho_grid[i] > rho_grid[i - 1])) throw Error(ErrorKind::InvalidArgument, "rho grid must increase");
  int prev = select_M(trace, rho_grid[0]);
  int best_drop = 0;
  std::size_t at = 0;
  for (std::size_t i = 1; i < rho_grid.size(); ++i) {
    const int cur = select_M(trace, rho_grid[i]);
    if (prev - cur > best_drop) {
      best_drop = prev - cur;
      at = i;
    }
    prev = cur;
  }
  if (best_drop == 0) throw Error(ErrorKind::NoJump, "selected dimension is constant over the rho grid");
  CalibrationResult r;
  r.method = CalibrationMethod::DimensionJump;
  r.rho_jump = rho_grid[at];
  r.jump_size = best_drop;
  r.rho_hat = 2.0 * r.rho_jump;
  r.M_hat = select_M(trace, r.rho_hat);
  return r;
}

namespace {

struct LineFit {
  double slope, intercept, r2;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return {slope, my - slope * mx, r2};
}

}  // namespace

CalibrationResult calibrate_slope_fit(const SelectionTrace& trace, int M_lo, int M_hi) {
  trace.validate();
  std::vector<double> x, y;
  for (std::size_t i = 0; i < trace.M.size(); ++i)
    if (trace.M[i] >= M_lo && trace.M[i] <= M_hi) {
      x.push_back(trace.M[i]);
      y.push_back(trace.gamma[i]);
    }
  if (x.size() < 4) {
    std::ostringstream os;
    os << "slope window [" << M_lo << ", " << M_hi << "] holds " << x.size() << " trace points, need 4";
    throw Error(ErrorKind::CalibrationFailed, os.str());
  }
  const LineFit fit = fit_line(x, y);
  if (!(fit.slope < 0.0)) {
    std::ostringstream os;
    os << "fitted contrast slope " << fit.slope << " is not negative";
    throw Error(ErrorKind::CalibrationFailed, os.str());
  }
  CalibrationResult r;
  r.method = CalibrationMethod::SlopeFit;
  r.window_lo = static_cast<int>(x.front());
  r.window_hi = static_cast<int>(x.back());
  r.slope = fit.slope;
  r.r_squared = fit.r2;
  r.rho_hat = 2.0 * std::abs(fit.slope) * double(trace.N) / std::log(double(trace.N));
  r.M_hat = select_M(trace, r.rho_hat);
  return r;
}

CalibrationResult calibrate_slope_fit(const SelectionTrace& trace) {
  trace.validate();
  const std::size_t n = trace.M.size();
  if (n < 4) throw Error(ErrorKind::CalibrationFailed, "slope fit needs at least 4 trace points");
  const std::size_t start = std::min(n / 2, n - 4);
  const int hi = trace.M.back();
  // Shrinking only helps when some window is close to linear; on a noisy
  // trace the short windows fit noise, so the full top half is kept.
  for (std::size_t first = start; n - first >= 4; ++first) {
    try {
      const CalibrationResult r = calibrate_slope_fit(trace, trace.M[first], hi);
      if (r.r_squared >= 0.99) return r;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CalibrationFailed) throw;
    }
  }
  return calibrate_slope_fit(trace, trace.M[start], hi);
}

int default_M_max(long N) {
  if (N < 3) return 1;
  const double v = std::sqrt(double(N) / std::log(double(N)));
  return std::max(1, std::min(50, static_cast<int>(std::floor(v))));
}

}  // namespace nphmm
