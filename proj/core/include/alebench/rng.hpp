#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "alebench/types.hpp"

namespace alebench {

/// SplitMix64 finalizer. Strong avalanche, used only for seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds a tag into a seed. The fold is order-sensitive, so chained calls
/// give distinct streams for distinct (field...) tuples:
///   derive_seed(derive_seed(s, a), b) != derive_seed(derive_seed(s, b), a)
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) noexcept {
  return splitmix64(base ^ splitmix64(tag ^ 0x632be59bd9b4e019ULL));
}

/// Deterministic random stream. All distributions are implemented on top of
/// the raw 64-bit output so that a given seed produces the same sequence on
/// every platform; single-owner, not thread-safe.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Equiprobable 0 or 1.
  int bit() { return static_cast<int>(next() >> 63); }

  /// Unbiased uniform index in [0, n); n must be > 0.
  std::size_t index(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return static_cast<std::size_t>(r % bound);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace alebench
