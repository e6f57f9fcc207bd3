#include <doctest.h>

#include <cmath>

#include "alebench/adaptation.hpp"
#include "alebench/channel.hpp"
#include "alebench/rng.hpp"
#include "alebench/wiener.hpp"

using namespace alebench;

TEST_CASE("recovers the generating weights of a self-consistent sinusoid") {
  // d[n] = sin(w*(n+1)) satisfies d[n] = 2cos(w)*d[n-1] - d[n-2] at every
  // index: the continuation through n = -1 is itself zero, so even the
  // zero-padded edge rows are consistent and the least-squares minimum is
  // exactly [2cos(w), -1] (up to the 1e-9 ridge).
  const AleConfig cfg{2, 1};
  const double omega = 0.3;
  SampleBuffer d(512);
  for (std::size_t n = 0; n < d.size(); ++n)
    d[n] = std::sin(omega * static_cast<double>(n + 1));

  const WeightVector w = wiener_oracle(d, cfg);
  REQUIRE(w.size() == 2);
  CHECK(std::abs(w[0] - 2.0 * std::cos(omega)) < 1e-6);
  CHECK(std::abs(w[1] + 1.0) < 1e-6);
  // The only residual is the n = 0 row, whose regressor is entirely padding.
  const double structural = std::sin(omega) * std::sin(omega) / 512.0;
  CHECK(mse_cost(d, w, cfg) == doctest::Approx(structural).epsilon(1e-9));
}

TEST_CASE("white noise: weights near zero, cost near input power") {
  Rng rng(52);
  const AleConfig cfg{5, 1};
  SampleBuffer d(10000);
  for (auto& x : d) x = rng.gaussian();

  const WeightVector w = wiener_oracle(d, cfg);
  const double cost = mse_cost(d, w, cfg);
  CHECK(cost >= 0.99 * measure_power(d));
  for (const double tap : w) CHECK(std::abs(tap) < 0.05);
}

TEST_CASE("oracle dominates random probing") {
  Rng signal_rng(53), probe_rng(54);
  const AleConfig cfg{4, 1};
  SampleBuffer d(2000);
  for (std::size_t n = 0; n < d.size(); ++n)
    d[n] = std::sin(0.3 * static_cast<double>(n)) + 0.5 * signal_rng.gaussian();

  const double oracle_cost = mse_cost(d, wiener_oracle(d, cfg), cfg);
  const BlockCost cost(d, cfg);
  for (int probe = 0; probe < 10000; ++probe) {
    WeightVector w(4);
    for (auto& tap : w) tap = probe_rng.uniform(-2, 2);
    CHECK(oracle_cost <= cost(w) + 1e-9);
  }
}

TEST_CASE("degenerate inputs stay solvable through the ridge") {
  const AleConfig cfg{3, 1};
  // Constant signal: rank-1 autocorrelation, ridge keeps it positive
  // definite.
  const SampleBuffer constant(64, 1.0);
  CHECK_NOTHROW(wiener_oracle(constant, cfg));

  const SampleBuffer zeros(64, 0.0);
  const WeightVector w = wiener_oracle(zeros, cfg);
  for (const double tap : w) CHECK(tap == 0.0);

  CHECK_THROWS_AS(wiener_oracle(SampleBuffer(3, 1.0), cfg), std::invalid_argument);
}
