#include "alebench/metrics.hpp"

namespace alebench {

double ber(const BitStream& tx, const BitStream& rx) {
  if (tx.size() != rx.size())
    throw std::invalid_argument("ber: length mismatch (" + std::to_string(tx.size()) +
                                " vs " + std::to_string(rx.size()) + ")");
  if (tx.empty()) throw std::invalid_argument("ber: empty streams");
  std::size_t errors = 0;
  for (std::size_t i = 0; i < tx.size(); ++i)
    if (tx[i] != rx[i]) ++errors;
  return static_cast<double>(errors) / static_cast<double>(tx.size());
}

double mse(const SampleBuffer& a, const SampleBuffer& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mse: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) throw std::invalid_argument("mse: empty buffers");
  double acc = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const double diff = a[n] - b[n];
    acc += diff * diff;
  }
  return acc / static_cast<double>(a.size());
}

std::vector<double> running_mse(const SampleBuffer& e, std::size_t window) {
  if (window == 0) throw std::invalid_argument("running_mse: window must be >= 1");
  std::vector<double> out(e.size());
  for (std::size_t n = 0; n < e.size(); ++n) {
    const std::size_t first = n + 1 >= window ? n + 1 - window : 0;
    double acc = 0.0;
    for (std::size_t m = first; m <= n; ++m) acc += e[m] * e[m];
    out[n] = acc / static_cast<double>(n - first + 1);
  }
  return out;
}

}  // namespace alebench
