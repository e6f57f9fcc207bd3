#pragma once

#include "alebench/adaptation.hpp"

namespace alebench {

struct LMSConfig {
  double step_size = 0.01;
  /// Empty means all zeros at the filter order.
  WeightVector initial_weights;
};

void validate(const LMSConfig& cfg);

/// Sample-by-sample gradient descent over the delayed regressor:
///   w <- w + step_size * e[n] * regressor(n)
/// `filtered`/`error` are the online trajectories; cost_history holds the
/// window-100 running MSE sampled every 100 samples (plus the final sample).
/// Throws DivergenceError with the offending sample index if the error or
/// weights leave the finite range.
AdaptationResult lms_run(const SampleBuffer& d, const LMSConfig& lms,
                         const AleConfig& cfg);

}  // namespace alebench
