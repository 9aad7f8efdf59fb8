#include "nphmm/rng.hpp"

#include <cmath>

#include "nphmm/error.hpp"

namespace nphmm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotErgodic: return "NotErgodic";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::SingularWhitening: return "SingularWhitening";
    case ErrorKind::NonRealDiagonalization: return "NonRealDiagonalization";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorKind::NoJump: return "NoJump";
    case ErrorKind::CalibrationFailed: return "CalibrationFailed";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform_open() {
  double u;
  do {
    u = uniform();
  } while (u == 0.0);
  return u;
}

// Marsaglia polar method.
double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

// Marsaglia-Tsang squeeze/acceptance for shape >= 1; shape < 1 is boosted
// through Gamma(shape + 1) * U^(1/shape).
double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw Error(ErrorKind::InvalidArgument, "gamma shape must be positive");
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_open(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::beta(double alpha, double beta_) {
  const double x = gamma(alpha);
  const double y = gamma(beta_);
  return x / (x + y);
}

}  // namespace nphmm
