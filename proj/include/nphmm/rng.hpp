#ifndef NPHMM_RNG_HPP
#define NPHMM_RNG_HPP

#include <cstdint>
#include <random>

namespace nphmm {

/// SplitMix64 finalizer; used to derive independent engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Reproducible random stream identified by (seed, stream).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. All variates are generated here rather than through the
/// <random> distributions, whose algorithms are implementation-defined, so
/// that a given (seed, stream) yields the same numbers on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();
  double normal();
  /// Gamma(shape, 1).
  double gamma(double shape);
  double beta(double alpha, double beta);
  /// Index drawn from an unnormalized discrete distribution.
  template <typename Weights>
  int categorical(const Weights& w) {
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) total += w[i];
    double u = uniform() * total;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n - 1; ++i) {
      u -= w[i];
      if (u < 0.0) return i;
    }
    return n - 1;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nphmm

#endif  // NPHMM_RNG_HPP
