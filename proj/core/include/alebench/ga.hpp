#pragma once

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <utility>

#include "alebench/adaptation.hpp"
#include "alebench/rng.hpp"

namespace alebench {

struct GAConfig {
  int population = 110;
  int generations = 300;
  int bits_per_weight = 16;
  std::array<double, 2> weight_range{-2.0, 2.0};
  double crossover_prob = 1.0;
  double mutation_prob = 0.1;
  /// Fraction of the population kept as elite parents each generation;
  /// ceil(parent_fraction * population) individuals survive unchanged.
  double parent_fraction = 0.5;
  /// Stop early once the best cost drops below this; disabled by default.
  std::optional<double> early_stop_cost;
};

void validate(const GAConfig& cfg);

/// Binary-coded candidate weight vector: bits_per_weight genes per tap,
/// most significant bit first. `decoded` and `cost` are refreshed when the
/// individual is evaluated.
struct Chromosome {
  std::vector<std::uint8_t> bits;
  WeightVector decoded;
  double cost = std::numeric_limits<double>::infinity();
};

/// Maps each gene's unsigned value linearly onto weight_range:
///   tap = w_min + value / (2^B - 1) * (w_max - w_min)
/// The tap count is bits.size() / bits_per_weight.
WeightVector decode_chromosome(const Chromosome& c, const GAConfig& cfg);

/// Inverse-cost roulette wheel for minimization: index i wins with
/// probability proportional to 1 / (costs[i] + 1e-12). Costs must be finite
/// and non-negative.
std::size_t roulette_select(std::span<const double> costs, Rng& rng);

/// Single-point crossover at a fixed cut in [1, len-1]: children swap tails.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a,
                                               const Chromosome& b,
                                               std::size_t cut);

/// With probability crossover_prob picks a uniform cut and swaps tails;
/// otherwise returns plain copies.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            double crossover_prob, Rng& rng);

/// Flips each bit independently with probability mutation_prob.
Chromosome mutate(const Chromosome& c, double mutation_prob, Rng& rng);

/// Uniformly random chromosomes; draw order is individual-major, bit-minor.
std::vector<Chromosome> random_population(int population, int order,
                                          int bits_per_weight, Rng& rng);

/// Evaluation / selection / reproduction cycle with elitism. Each generation
/// every individual is (re-)evaluated on the block cost, the lowest-cost
/// ceil(parent_fraction*population) survive unchanged, and the remaining
/// slots are filled with mutated crossover children of roulette-selected
/// elite parents. cost_history records the best-ever cost per generation.
AdaptationResult ga_run(const SampleBuffer& d, const GAConfig& ga,
                        const AleConfig& cfg, Rng& rng);

}  // namespace alebench
