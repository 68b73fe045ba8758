#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace islog {

/// Deterministic random source. Wraps mt19937_64 with a fixed uint64->double
/// mapping so the same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1).
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  /// Standard exponential; used for simplex-interior sampling.
  double expo() { return -std::log1p(-u01()); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// Stream derivation for parallel loops: hash (seed, stream) into a fresh
  /// seed so iteration i gets an independent generator regardless of order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace islog
