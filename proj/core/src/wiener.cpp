#include "alebench/wiener.hpp"

#include <cmath>
#include <vector>

namespace alebench {

namespace {
constexpr double kRidge = 1e-9;
}

WeightVector wiener_oracle(const SampleBuffer& d, const AleConfig& cfg) {
  validate(cfg);
  const auto size = static_cast<std::size_t>(cfg.order);
  if (d.size() <= size)
    throw std::invalid_argument("wiener_oracle: need more samples than taps (" +
                                std::to_string(d.size()) + " <= " +
                                std::to_string(size) + ")");

  // Normal equations accumulated per sample from the literal regressors;
  // deliberately independent of the BlockCost fast path.
  std::vector<double> a(size * size, 0.0);
  std::vector<double> rhs(size, 0.0);
  std::vector<double> reg(size);
  const double h = static_cast<double>(d.size());
  for (std::size_t n = 0; n < d.size(); ++n) {
    const auto base = static_cast<std::ptrdiff_t>(n) - cfg.delay;
    for (std::size_t j = 0; j < size; ++j) {
      const std::ptrdiff_t idx = base - static_cast<std::ptrdiff_t>(j);
      reg[j] = idx >= 0 ? d[static_cast<std::size_t>(idx)] : 0.0;
    }
    for (std::size_t i = 0; i < size; ++i) {
      rhs[i] += d[n] * reg[i];
      for (std::size_t j = i; j < size; ++j) a[i * size + j] += reg[i] * reg[j];
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    rhs[i] /= h;
    for (std::size_t j = i; j < size; ++j) {
      a[i * size + j] /= h;
      a[j * size + i] = a[i * size + j];
    }
    a[i * size + i] += kRidge;
  }

  // Cholesky factorization; the ridge keeps the matrix positive definite for
  // any finite input.
  std::vector<double> chol(size * size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = a[i * size + j];
      for (std::size_t k = 0; k < j; ++k)
        acc -= chol[i * size + k] * chol[j * size + k];
      if (i == j) {
        if (!(acc > 0.0))
          throw std::runtime_error(
              "wiener_oracle: normal equations singular beyond ridge rescue");
        chol[i * size + i] = std::sqrt(acc);
      } else {
        chol[i * size + j] = acc / chol[j * size + j];
      }
    }
  }

  // Forward then backward substitution.
  WeightVector w(size);
  for (std::size_t i = 0; i < size; ++i) {
    double acc = rhs[i];
    for (std::size_t k = 0; k < i; ++k) acc -= chol[i * size + k] * w[k];
    w[i] = acc / chol[i * size + i];
  }
  for (std::size_t ii = size; ii-- > 0;) {
    double acc = w[ii];
    for (std::size_t k = ii + 1; k < size; ++k) acc -= chol[k * size + ii] * w[k];
    w[ii] = acc / chol[ii * size + ii];
  }
  return w;
}

}  // namespace alebench
