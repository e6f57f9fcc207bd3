#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alebench {

/// Ordered sequence of {0,1} values.
using BitStream = std::vector<std::uint8_t>;

/// Finite sequence of real-valued discrete-time samples.
using SampleBuffer = std::vector<double>;

/// FIR tap weights, one per filter order.
using WeightVector = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Invalid or inconsistent configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An online weight update left the finite range.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::size_t sample_index)
      : std::runtime_error(what), sample_index_(sample_index) {}

  std::size_t sample_index() const noexcept { return sample_index_; }

 private:
  std::size_t sample_index_;
};

}  // namespace alebench
