#include "alebench/pso.hpp"

#include <algorithm>
#include <cmath>

namespace alebench {

void validate(const PSOConfig& cfg) {
  if (cfg.particles < 2) throw ConfigError("pso.particles must be >= 2");
  if (cfg.iterations < 1) throw ConfigError("pso.iterations must be >= 1");
  if (!(cfg.c1 >= 0.0) || !(cfg.c2 >= 0.0))
    throw ConfigError("pso.c1 and pso.c2 must be >= 0");
  if (!std::isfinite(cfg.inertia)) throw ConfigError("pso.inertia must be finite");
  if (!(cfg.v_max > 0.0)) throw ConfigError("pso.v_max must be > 0");
  if (!(cfg.init_range[0] < cfg.init_range[1]))
    throw ConfigError("pso.init_range must satisfy w_min < w_max");
}

std::vector<double> velocity_step(const Particle& p, const WeightVector& global_best,
                                  const PSOConfig& cfg, std::span<const double> r1,
                                  std::span<const double> r2) {
  const std::size_t dims = p.position.size();
  if (p.velocity.size() != dims || p.best_position.size() != dims ||
      global_best.size() != dims || r1.size() != dims || r2.size() != dims)
    throw std::invalid_argument("velocity_step: dimension mismatch");

  std::vector<double> v(dims);
  for (std::size_t j = 0; j < dims; ++j) {
    const double updated = cfg.inertia * p.velocity[j] +
                           cfg.c1 * r1[j] * (p.best_position[j] - p.position[j]) +
                           cfg.c2 * r2[j] * (global_best[j] - p.position[j]);
    v[j] = std::clamp(updated, -cfg.v_max, cfg.v_max);
  }
  return v;
}

std::vector<double> pso_velocity_update(const Particle& p,
                                        const WeightVector& global_best,
                                        const PSOConfig& cfg, Rng& rng) {
  const std::size_t dims = p.position.size();
  std::vector<double> r1(dims), r2(dims);
  for (std::size_t j = 0; j < dims; ++j) {
    r1[j] = rng.uniform();
    r2[j] = rng.uniform();
  }
  return velocity_step(p, global_best, cfg, r1, r2);
}

WeightVector pso_position_update(const Particle& p, std::span<const double> velocity) {
  if (velocity.size() != p.position.size())
    throw std::invalid_argument("pso_position_update: dimension mismatch");
  WeightVector next(p.position.size());
  for (std::size_t j = 0; j < next.size(); ++j) next[j] = p.position[j] + velocity[j];
  return next;
}

AdaptationResult pso_run(const SampleBuffer& d, const PSOConfig& pso,
                         const AleConfig& cfg, Rng& rng,
                         std::vector<Particle>* final_swarm) {
  validate(cfg);
  validate(pso);
  const BlockCost cost(d, cfg);

  const auto swarm_size = static_cast<std::size_t>(pso.particles);
  const auto dims = static_cast<std::size_t>(cfg.order);

  std::vector<Particle> swarm(swarm_size);
  for (auto& p : swarm) {
    p.position.resize(dims);
    for (auto& x : p.position) x = rng.uniform(pso.init_range[0], pso.init_range[1]);
    p.velocity.assign(dims, 0.0);
    p.best_position = p.position;
    p.best_cost = cost(p.position);
  }

  AdaptationResult result;
  result.evaluations = swarm_size;

  std::size_t best_index = 0;
  for (std::size_t i = 1; i < swarm_size; ++i)
    if (swarm[i].best_cost < swarm[best_index].best_cost) best_index = i;
  WeightVector global_best = swarm[best_index].best_position;
  double global_best_cost = swarm[best_index].best_cost;
  result.cost_history.push_back({0, global_best_cost});

  for (int k = 1; k <= pso.iterations; ++k) {
    for (auto& p : swarm) {
      p.velocity = pso_velocity_update(p, global_best, pso, rng);
      p.position = pso_position_update(p, p.velocity);
    }
    for (auto& p : swarm) {
      const double c = cost(p.position);
      if (c < p.best_cost) {
        p.best_cost = c;
        p.best_position = p.position;
      }
    }
    result.evaluations += swarm_size;
    for (const auto& p : swarm) {
      if (p.best_cost < global_best_cost) {
        global_best_cost = p.best_cost;
        global_best = p.best_position;
      }
    }
    result.cost_history.push_back({static_cast<std::size_t>(k), global_best_cost});
  }

  if (final_swarm) *final_swarm = swarm;
  result.final_weights = std::move(global_best);
  result.filtered = filter_output(d, result.final_weights, cfg);
  result.error = error_signal(d, result.filtered);
  return result;
}

}  // namespace alebench
