#include <doctest.h>

#include "alebench/adaptation.hpp"
#include "alebench/metrics.hpp"
#include "alebench/rng.hpp"

using namespace alebench;

TEST_CASE("ber: basic ratios and errors") {
  CHECK(ber({0, 1, 1, 0}, {0, 1, 1, 0}) == 0.0);
  CHECK(ber({0, 1}, {1, 0}) == 1.0);

  BitStream tx(100, 0), rx(100, 0);
  for (int i = 0; i < 5; ++i) rx[static_cast<std::size_t>(i * 7)] = 1;
  CHECK(ber(tx, rx) == 0.05);

  CHECK_THROWS_AS(ber({0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(ber({}, {}), std::invalid_argument);
}

TEST_CASE("ber is symmetric and permutation-invariant") {
  Rng rng(31);
  BitStream a(64), b(64);
  for (auto& x : a) x = static_cast<std::uint8_t>(rng.bit());
  for (auto& x : b) x = static_cast<std::uint8_t>(rng.bit());
  CHECK(ber(a, b) == ber(b, a));

  BitStream pa = a, pb = b;
  for (std::size_t i = pa.size(); i > 1; --i) {
    const std::size_t j = rng.index(i);
    std::swap(pa[i - 1], pa[j]);
    std::swap(pb[i - 1], pb[j]);
  }
  CHECK(ber(pa, pb) == ber(a, b));
}

TEST_CASE("mse: examples and symmetry") {
  CHECK(mse({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(mse({1, 2}, {0, 0}) == 2.5);
  Rng rng(32);
  SampleBuffer a(40), b(40);
  for (auto& x : a) x = rng.uniform(-1, 1);
  for (auto& x : b) x = rng.uniform(-1, 1);
  CHECK(mse(a, b) == mse(b, a));
  CHECK(mse(a, b) >= 0.0);
  CHECK_THROWS_AS(mse({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("mse agrees with mse_cost when filtered = filter_output") {
  Rng rng(33);
  const AleConfig cfg{3, 1};
  SampleBuffer d(128);
  for (auto& x : d) x = rng.uniform(-1, 1);
  const WeightVector w{0.25, -0.5, 0.125};
  const SampleBuffer y = filter_output(d, w, cfg);
  CHECK(mse(d, y) == mse_cost(d, w, cfg));
}

TEST_CASE("running_mse: window behaviour") {
  CHECK(running_mse({1, 3}, 2) == std::vector<double>{1, 5});
  CHECK(running_mse({2, 2, 2, 2}, 3) == std::vector<double>{4, 4, 4, 4});

  const SampleBuffer e{0.5, -1.5, 2.0, -0.25};
  const auto instant = running_mse(e, 1);
  for (std::size_t n = 0; n < e.size(); ++n) CHECK(instant[n] == e[n] * e[n]);

  // A window at least as long as the signal collapses to the plain MSE at the
  // final index.
  const auto wide = running_mse(e, 64);
  CHECK(wide.back() == doctest::Approx(mse(e, SampleBuffer(e.size(), 0.0)))
                           .epsilon(1e-15));

  CHECK_THROWS_AS(running_mse(e, 0), std::invalid_argument);
}
