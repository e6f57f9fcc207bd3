#include <doctest.h>

#include <cmath>

#include "alebench/channel.hpp"
#include "alebench/modem.hpp"
#include "alebench/pso.hpp"
#include "alebench/wiener.hpp"

using namespace alebench;

namespace {

SampleBuffer noisy_carrier(std::size_t n_bits, double snr_db, std::uint64_t seed) {
  ModemConfig modem;
  Rng bits_rng(derive_seed(seed, 1)), noise_rng(derive_seed(seed, 2));
  return add_awgn(modulate(generate_bits(n_bits, bits_rng), modem), snr_db,
                  noise_rng);
}

}  // namespace

TEST_CASE("velocity_step: hand check with forced random factors") {
  PSOConfig pso;
  pso.c1 = 1.0;
  pso.c2 = 1.0;
  pso.v_max = 10.0;
  Particle p;
  p.position = {0.0};
  p.velocity = {0.0};
  p.best_position = {1.0};

  const std::vector<double> r{0.5};
  const auto v = velocity_step(p, {2.0}, pso, r, r);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == 1.5);  // 0 + 0.5*(1-0) + 0.5*(2-0)
}

TEST_CASE("velocity keeps its value with zero attraction and unit inertia") {
  PSOConfig pso;
  pso.c1 = 0.0;
  pso.c2 = 0.0;
  pso.inertia = 1.0;
  pso.v_max = 10.0;
  Particle p;
  p.position = {0.3, -0.4};
  p.velocity = {0.25, -0.75};
  p.best_position = {1.0, 1.0};
  Rng rng(81);
  CHECK(pso_velocity_update(p, {2.0, 2.0}, pso, rng) == p.velocity);
}

TEST_CASE("velocity is inertia-scaled when position equals both bests") {
  PSOConfig pso;
  pso.inertia = 0.5;
  pso.v_max = 10.0;
  Particle p;
  p.position = {1.0, 2.0};
  p.velocity = {0.4, -0.8};
  p.best_position = p.position;
  Rng rng(82);
  const auto v = pso_velocity_update(p, p.position, pso, rng);
  CHECK(v == std::vector<double>{0.2, -0.4});
}

TEST_CASE("velocity components are clamped to v_max") {
  PSOConfig pso;
  pso.v_max = 0.5;
  Particle p;
  p.position = {0.0};
  p.velocity = {0.0};
  p.best_position = {10.0};
  const std::vector<double> r{1.0};
  const auto v = velocity_step(p, {10.0}, pso, r, r);
  CHECK(v[0] == 0.5);
}

TEST_CASE("position update adds the velocity and never clamps") {
  Particle p;
  p.position = {0.0, 3.0};
  p.velocity = {0.0, 0.0};
  p.best_position = p.position;
  CHECK(pso_position_update(p, std::vector<double>{1.5, -100.0}) ==
        WeightVector{1.5, -97.0});

  // Repeated constant velocity walks linearly.
  WeightVector x{0.0};
  for (int k = 0; k < 5; ++k) {
    Particle q;
    q.position = x;
    q.velocity = {0.0};
    q.best_position = x;
    x = pso_position_update(q, std::vector<double>{1.0});
  }
  CHECK(x == WeightVector{5.0});
}

TEST_CASE("frozen swarm never improves on the initial best") {
  const SampleBuffer d = noisy_carrier(60, 0.0, 201);
  PSOConfig pso;
  pso.particles = 8;
  pso.iterations = 20;
  pso.c1 = 0.0;
  pso.c2 = 0.0;  // with zero initial velocities nothing ever moves
  Rng rng(202);
  const AdaptationResult result = pso_run(d, pso, AleConfig{3, 1}, rng);
  REQUIRE(result.cost_history.size() == 21);
  for (const auto& point : result.cost_history)
    CHECK(point.cost == result.cost_history.front().cost);
}

TEST_CASE("global best is monotone and evaluations are counted") {
  const SampleBuffer d = noisy_carrier(200, -2.0, 203);
  PSOConfig pso;
  pso.particles = 12;
  pso.iterations = 40;
  Rng rng(204);
  const AdaptationResult result = pso_run(d, pso, AleConfig{5, 1}, rng);
  REQUIRE(result.cost_history.size() == 41);
  for (std::size_t k = 1; k < result.cost_history.size(); ++k)
    CHECK(result.cost_history[k].cost <= result.cost_history[k - 1].cost);
  CHECK(result.evaluations == 12u * 41u);
}

TEST_CASE("pso_run approaches the least-squares optimum") {
  const SampleBuffer d = noisy_carrier(1000, 0.0, 205);
  PSOConfig pso;
  pso.particles = 30;
  pso.iterations = 80;
  const AleConfig cfg{5, 1};
  Rng rng(206);
  const AdaptationResult result = pso_run(d, pso, cfg, rng);
  const double oracle = mse_cost(d, wiener_oracle(d, cfg), cfg);
  const double found = mse_cost(d, result.final_weights, cfg);
  CHECK(found <= oracle * 1.10);
  CHECK(found >= oracle - 1e-9);
}

TEST_CASE("same seed twice gives an identical cost history") {
  const SampleBuffer d = noisy_carrier(100, 0.0, 207);
  PSOConfig pso;
  pso.particles = 6;
  pso.iterations = 15;
  Rng a(208), b(208);
  const AdaptationResult r1 = pso_run(d, pso, AleConfig{4, 1}, a);
  const AdaptationResult r2 = pso_run(d, pso, AleConfig{4, 1}, b);
  REQUIRE(r1.cost_history.size() == r2.cost_history.size());
  for (std::size_t k = 0; k < r1.cost_history.size(); ++k)
    CHECK(r1.cost_history[k].cost == r2.cost_history[k].cost);
}

TEST_CASE("swarms below two particles are rejected") {
  PSOConfig pso;
  pso.particles = 1;
  Rng rng(209);
  CHECK_THROWS_AS(pso_run({1, 2, 3}, pso, AleConfig{2, 1}, rng), ConfigError);
}
