#include "alebench/ale.hpp"

namespace alebench {

void validate(const AleConfig& cfg) {
  if (cfg.order < 1) throw ConfigError("ale.order must be >= 1");
  if (cfg.delay < 1) throw ConfigError("ale.delay must be >= 1");
}

std::vector<double> regressor_at(const SampleBuffer& d, std::size_t n,
                                 const AleConfig& cfg) {
  validate(cfg);
  if (n >= d.size())
    throw std::invalid_argument("regressor_at: index " + std::to_string(n) +
                                " outside buffer of length " +
                                std::to_string(d.size()));
  std::vector<double> reg(static_cast<std::size_t>(cfg.order), 0.0);
  const auto base = static_cast<std::ptrdiff_t>(n) - cfg.delay;
  for (std::ptrdiff_t j = 0; j < cfg.order && base - j >= 0; ++j)
    reg[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(base - j)];
  return reg;
}

SampleBuffer filter_output(const SampleBuffer& d, const WeightVector& w,
                           const AleConfig& cfg) {
  validate(cfg);
  if (w.size() != static_cast<std::size_t>(cfg.order))
    throw std::invalid_argument("filter_output: got " + std::to_string(w.size()) +
                                " weights for filter order " +
                                std::to_string(cfg.order));
  SampleBuffer y(d.size());
  for (std::size_t n = 0; n < d.size(); ++n)
    y[n] = regressor_dot(d, n, w, cfg.delay);
  return y;
}

SampleBuffer error_signal(const SampleBuffer& d, const SampleBuffer& y) {
  if (d.size() != y.size())
    throw std::invalid_argument("error_signal: length mismatch (" +
                                std::to_string(d.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  SampleBuffer e(d.size());
  for (std::size_t n = 0; n < d.size(); ++n) e[n] = d[n] - y[n];
  return e;
}

}  // namespace alebench
