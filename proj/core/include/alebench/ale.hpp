#pragma once

#include <span>

#include "alebench/types.hpp"

namespace alebench {

/// Adaptive line enhancer structure: FIR order and decorrelation delay.
struct AleConfig {
  int order = 5;  // taps L
  int delay = 1;  // samples
};

void validate(const AleConfig& cfg);

/// Delayed regressor at sample n: element j is d[n - delay - j], reading
/// indices before the start of d as zero. n must index into d.
std::vector<double> regressor_at(const SampleBuffer& d, std::size_t n,
                                 const AleConfig& cfg);

/// Inner product of the taps with the delayed regressor at sample n.
/// Identical arithmetic to regressor_at followed by a dot product; the
/// zero-history terms are simply skipped.
inline double regressor_dot(const SampleBuffer& d, std::size_t n,
                            std::span<const double> w, int delay) {
  const auto base = static_cast<std::ptrdiff_t>(n) - delay;
  const std::ptrdiff_t count =
      std::min(static_cast<std::ptrdiff_t>(w.size()), base + 1);
  double acc = 0.0;
  for (std::ptrdiff_t j = 0; j < count; ++j)
    acc += w[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(base - j)];
  return acc;
}

/// y[n] = w . regressor_at(d, n) for every n; output length equals input
/// length.
SampleBuffer filter_output(const SampleBuffer& d, const WeightVector& w,
                           const AleConfig& cfg);

/// e[n] = d[n] - y[n]; lengths must match.
SampleBuffer error_signal(const SampleBuffer& d, const SampleBuffer& y);

}  // namespace alebench
