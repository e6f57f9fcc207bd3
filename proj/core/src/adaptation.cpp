#include "alebench/adaptation.hpp"

#include <algorithm>

namespace alebench {

double mse_cost(const SampleBuffer& d, const WeightVector& w, const AleConfig& cfg) {
  validate(cfg);
  if (d.empty()) throw std::invalid_argument("mse_cost: empty buffer");
  if (w.size() != static_cast<std::size_t>(cfg.order))
    throw std::invalid_argument("mse_cost: got " + std::to_string(w.size()) +
                                " weights for filter order " +
                                std::to_string(cfg.order));
  double acc = 0.0;
  for (std::size_t n = 0; n < d.size(); ++n) {
    const double e = d[n] - regressor_dot(d, n, w, cfg.delay);
    acc += e * e;
  }
  return acc / static_cast<double>(d.size());
}

BlockCost::BlockCost(const SampleBuffer& d, const AleConfig& cfg)
    : order_(cfg.order) {
  validate(cfg);
  if (d.empty()) throw std::invalid_argument("BlockCost: empty buffer");

  const auto h = static_cast<double>(d.size());
  const auto size = static_cast<std::size_t>(cfg.order);
  const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(d.size());

  double power = 0.0;
  for (const double x : d) power += x * x;
  signal_power_ = power / h;

  cross_.assign(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    const std::ptrdiff_t lag = cfg.delay + static_cast<std::ptrdiff_t>(i);
    double acc = 0.0;
    for (std::ptrdiff_t n = lag; n < len; ++n)
      acc += d[static_cast<std::size_t>(n)] * d[static_cast<std::size_t>(n - lag)];
    cross_[i] = acc / h;
  }

  autocorr_.assign(size * size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      const std::ptrdiff_t lag_i = cfg.delay + static_cast<std::ptrdiff_t>(i);
      const std::ptrdiff_t lag_j = cfg.delay + static_cast<std::ptrdiff_t>(j);
      double acc = 0.0;
      for (std::ptrdiff_t n = lag_j; n < len; ++n)
        acc += d[static_cast<std::size_t>(n - lag_i)] *
               d[static_cast<std::size_t>(n - lag_j)];
      acc /= h;
      autocorr_[i * size + j] = acc;
      autocorr_[j * size + i] = acc;
    }
  }
}

double BlockCost::operator()(std::span<const double> w) const {
  const auto size = static_cast<std::size_t>(order_);
  if (w.size() != size)
    throw std::invalid_argument("BlockCost: got " + std::to_string(w.size()) +
                                " weights for filter order " + std::to_string(order_));
  double cost = signal_power_;
  for (std::size_t i = 0; i < size; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < size; ++j) row += autocorr_[i * size + j] * w[j];
    cost += w[i] * (row - 2.0 * cross_[i]);
  }
  return std::max(cost, 0.0);
}

}  // namespace alebench
