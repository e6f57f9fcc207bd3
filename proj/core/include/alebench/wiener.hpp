#pragma once

#include "alebench/ale.hpp"
#include "alebench/types.hpp"

namespace alebench {

/// Closed-form least-squares solution of the ALE problem: solves the normal
/// equations (R + lambda*I) w = b built from the same zero-padded regressors
/// the searchers use, with ridge lambda = 1e-9 for conditioning. The block
/// MSE surface is quadratic, so this is its global minimizer. Requires
/// len(d) > order.
WeightVector wiener_oracle(const SampleBuffer& d, const AleConfig& cfg);

}  // namespace alebench
