#pragma once

#include <string>
#include <vector>

#include "alebench/types.hpp"

namespace alebench {

/// One aggregated point of a result curve.
struct MetricPoint {
  double x;            // SNR dB, step size, population size, probability, ...
  double y;            // BER or MSE
  std::string series;  // typically the algorithm name
  int trials;          // runs averaged into y
};

/// Fraction of differing positions; streams must be non-empty and of equal
/// length.
double ber(const BitStream& tx, const BitStream& rx);

/// Mean squared elementwise difference; buffers must be non-empty and of
/// equal length.
double mse(const SampleBuffer& a, const SampleBuffer& b);

/// Trailing-window mean of e[m]^2: out[n] averages over
/// m in [max(0, n-window+1), n].
std::vector<double> running_mse(const SampleBuffer& e, std::size_t window);

}  // namespace alebench
