#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alebench/ale.hpp"
#include "alebench/types.hpp"

namespace alebench {

struct CostPoint {
  std::size_t iteration;
  double cost;
};

/// Common result of one adaptation run. `filtered` is the output trajectory
/// the algorithm actually produced over the input: for block searchers (GA,
/// PSO) that is the final weights applied to the whole buffer, for LMS it is
/// the online output under the time-varying weights.
struct AdaptationResult {
  WeightVector final_weights;
  SampleBuffer filtered;
  SampleBuffer error;
  std::vector<CostPoint> cost_history;
  std::uint64_t evaluations = 0;  // cost-function calls (0 for LMS)
};

/// Block MSE of the ALE residual: (1/H) * sum (d[n] - y[n])^2 with
/// y = filter_output(d, w, cfg). Direct reference implementation.
double mse_cost(const SampleBuffer& d, const WeightVector& w, const AleConfig& cfg);

/// Precomputed correlation statistics of one input block. Evaluates the same
/// quantity as mse_cost through the quadratic form
///   J(w) = P_d - 2 b.w + w.R.w
/// in O(L^2) per candidate instead of O(H*L). Values agree with mse_cost to
/// floating-point rounding; negative rounding residue near perfect fits is
/// clamped to zero.
class BlockCost {
 public:
  BlockCost(const SampleBuffer& d, const AleConfig& cfg);

  double operator()(std::span<const double> w) const;

  int order() const noexcept { return order_; }
  double signal_power() const noexcept { return signal_power_; }

 private:
  int order_;
  double signal_power_;            // (1/H) sum d^2
  std::vector<double> cross_;      // b[i] = (1/H) sum d[n] * d[n-delay-i]
  std::vector<double> autocorr_;   // R[i][j], row-major L x L
};

}  // namespace alebench
