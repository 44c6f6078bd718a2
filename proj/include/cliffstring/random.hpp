#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "cliffstring/octonion.hpp"

namespace cliffstring {

/// Seeded stream built on std::mt19937_64, whose output sequence is fixed by
/// the standard. Doubles are formed from the top 53 bits so draws reproduce
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  std::complex<double> complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

  Octonion octonion(double scale = 1.0) {
    Octonion z;
    for (int i = 0; i < 8; ++i) z[i] = uniform(-scale, scale);
    return z;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliffstring
