#pragma once

#include <array>
#include <limits>
#include <span>

#include "alebench/adaptation.hpp"
#include "alebench/rng.hpp"

namespace alebench {

struct PSOConfig {
  int particles = 60;
  int iterations = 200;
  double c1 = 2.0;  // attraction to the personal best
  double c2 = 2.0;  // attraction to the global best
  /// Previous-velocity scaling. At 1.0 (the literal update rule) the clamped
  /// swarm keeps oscillating at the clamp amplitude and stops refining around
  /// 1e-3 relative; the constriction-equivalent 0.729 damps it to machine
  /// precision, so that is the default.
  double inertia = 0.729;
  double v_max = 0.5;
  std::array<double, 2> init_range{-2.0, 2.0};
};

void validate(const PSOConfig& cfg);

struct Particle {
  WeightVector position;
  std::vector<double> velocity;
  WeightVector best_position;
  double best_cost = std::numeric_limits<double>::infinity();
};

/// v' = inertia*v + c1*r1*(pbest - x) + c2*r2*(gbest - x), componentwise,
/// each component clamped to [-v_max, v_max]. Deterministic core taking the
/// random factors explicitly.
std::vector<double> velocity_step(const Particle& p, const WeightVector& global_best,
                                  const PSOConfig& cfg, std::span<const double> r1,
                                  std::span<const double> r2);

/// Draws r1, r2 i.i.d. uniform [0,1) per dimension (r1 then r2 for each
/// dimension) and applies velocity_step.
std::vector<double> pso_velocity_update(const Particle& p,
                                        const WeightVector& global_best,
                                        const PSOConfig& cfg, Rng& rng);

/// Elementwise position + velocity; positions are not clamped.
WeightVector pso_position_update(const Particle& p, std::span<const double> velocity);

/// Swarm search over the block cost. Positions start uniform in init_range
/// with zero velocities; each iteration every particle moves, is
/// re-evaluated, and the personal/global bests are refreshed afterwards
/// (synchronous update). cost_history records the global best per iteration,
/// starting with the initial population as iteration 0. final_swarm, when
/// given, receives the end-of-run particle states.
AdaptationResult pso_run(const SampleBuffer& d, const PSOConfig& pso,
                         const AleConfig& cfg, Rng& rng,
                         std::vector<Particle>* final_swarm = nullptr);

}  // namespace alebench
