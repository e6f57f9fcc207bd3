#include "alebench/lms.hpp"

#include <cmath>

#include "alebench/metrics.hpp"

namespace alebench {

namespace {
constexpr std::size_t kCostSampleStride = 100;
constexpr std::size_t kRunningMseWindow = 100;
}  // namespace

void validate(const LMSConfig& cfg) {
  if (!(cfg.step_size > 0.0) || !std::isfinite(cfg.step_size))
    throw ConfigError("lms.step_size must be finite and > 0");
  for (const double w : cfg.initial_weights)
    if (!std::isfinite(w)) throw ConfigError("lms.initial_weights must be finite");
}

AdaptationResult lms_run(const SampleBuffer& d, const LMSConfig& lms,
                         const AleConfig& cfg) {
  validate(cfg);
  validate(lms);
  if (d.empty()) throw std::invalid_argument("lms_run: empty buffer");

  const auto order = static_cast<std::size_t>(cfg.order);
  WeightVector w = lms.initial_weights;
  if (w.empty()) w.assign(order, 0.0);
  if (w.size() != order)
    throw ConfigError("lms.initial_weights has " + std::to_string(w.size()) +
                      " taps, filter order is " + std::to_string(order));

  AdaptationResult result;
  result.filtered.resize(d.size());
  result.error.resize(d.size());

  const double mu = lms.step_size;
  for (std::size_t n = 0; n < d.size(); ++n) {
    const double y = regressor_dot(d, n, w, cfg.delay);
    const double e = d[n] - y;
    if (!std::isfinite(e))
      throw DivergenceError("lms_run: diverged at sample " + std::to_string(n) +
                                " (step_size " + std::to_string(mu) + ")",
                            n);
    result.filtered[n] = y;
    result.error[n] = e;

    const auto base = static_cast<std::ptrdiff_t>(n) - cfg.delay;
    const std::ptrdiff_t count =
        std::min(static_cast<std::ptrdiff_t>(order), base + 1);
    const double scale = mu * e;
    for (std::ptrdiff_t j = 0; j < count; ++j)
      w[static_cast<std::size_t>(j)] += scale * d[static_cast<std::size_t>(base - j)];
  }
  for (const double tap : w)
    if (!std::isfinite(tap))
      throw DivergenceError("lms_run: diverged at sample " +
                                std::to_string(d.size() - 1) + " (step_size " +
                                std::to_string(mu) + ")",
                            d.size() - 1);

  const std::vector<double> rmse = running_mse(result.error, kRunningMseWindow);
  for (std::size_t n = kCostSampleStride - 1; n < rmse.size();
       n += kCostSampleStride)
    result.cost_history.push_back({n, rmse[n]});
  if (result.cost_history.empty() ||
      result.cost_history.back().iteration != rmse.size() - 1)
    result.cost_history.push_back({rmse.size() - 1, rmse.back()});

  result.final_weights = std::move(w);
  return result;
}

}  // namespace alebench
