#include "alebench/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace alebench {

namespace {
constexpr double kRouletteEpsilon = 1e-12;
}

void validate(const GAConfig& cfg) {
  if (cfg.population < 4) throw ConfigError("ga.population must be >= 4");
  if (cfg.generations < 1) throw ConfigError("ga.generations must be >= 1");
  if (cfg.bits_per_weight < 2 || cfg.bits_per_weight > 32)
    throw ConfigError("ga.bits_per_weight must lie in [2, 32]");
  if (!(cfg.weight_range[0] < cfg.weight_range[1]))
    throw ConfigError("ga.weight_range must satisfy w_min < w_max");
  if (!(cfg.crossover_prob >= 0.0) || !(cfg.crossover_prob <= 1.0))
    throw ConfigError("ga.crossover_prob must lie in [0, 1]");
  if (!(cfg.mutation_prob >= 0.0) || !(cfg.mutation_prob <= 1.0))
    throw ConfigError("ga.mutation_prob must lie in [0, 1]");
  if (!(cfg.parent_fraction > 0.0) || !(cfg.parent_fraction <= 1.0))
    throw ConfigError("ga.parent_fraction must lie in (0, 1]");
}

WeightVector decode_chromosome(const Chromosome& c, const GAConfig& cfg) {
  validate(cfg);
  const auto bits_per_weight = static_cast<std::size_t>(cfg.bits_per_weight);
  if (c.bits.empty() || c.bits.size() % bits_per_weight != 0)
    throw std::invalid_argument("decode_chromosome: " + std::to_string(c.bits.size()) +
                                " bits is not a multiple of bits_per_weight " +
                                std::to_string(bits_per_weight));
  const std::size_t order = c.bits.size() / bits_per_weight;
  const double lo = cfg.weight_range[0];
  const double span = cfg.weight_range[1] - cfg.weight_range[0];
  const double denom =
      static_cast<double>((std::uint64_t{1} << cfg.bits_per_weight) - 1);

  WeightVector w(order);
  for (std::size_t j = 0; j < order; ++j) {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < bits_per_weight; ++k)
      value = (value << 1) | (c.bits[j * bits_per_weight + k] & 1u);
    w[j] = lo + static_cast<double>(value) / denom * span;
  }
  return w;
}

std::size_t roulette_select(std::span<const double> costs, Rng& rng) {
  if (costs.empty()) throw std::invalid_argument("roulette_select: empty costs");
  double total = 0.0;
  for (const double c : costs) {
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("roulette_select: costs must be finite and >= 0");
    total += 1.0 / (c + kRouletteEpsilon);
  }
  const double target = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < costs.size(); ++i) {
    acc += 1.0 / (costs[i] + kRouletteEpsilon);
    if (target < acc) return i;
  }
  return costs.size() - 1;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a,
                                               const Chromosome& b,
                                               std::size_t cut) {
  if (a.bits.size() != b.bits.size())
    throw std::invalid_argument("crossover: chromosome length mismatch");
  if (cut < 1 || cut >= a.bits.size())
    throw std::invalid_argument("crossover: cut point out of range");
  Chromosome c1, c2;
  c1.bits = a.bits;
  c2.bits = b.bits;
  for (std::size_t i = cut; i < a.bits.size(); ++i)
    std::swap(c1.bits[i], c2.bits[i]);
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                            double crossover_prob, Rng& rng) {
  if (a.bits.size() != b.bits.size())
    throw std::invalid_argument("crossover: chromosome length mismatch");
  if (rng.uniform() < crossover_prob && a.bits.size() >= 2) {
    const std::size_t cut = 1 + rng.index(a.bits.size() - 1);
    return crossover_at(a, b, cut);
  }
  Chromosome c1, c2;
  c1.bits = a.bits;
  c2.bits = b.bits;
  return {std::move(c1), std::move(c2)};
}

Chromosome mutate(const Chromosome& c, double mutation_prob, Rng& rng) {
  Chromosome out;
  out.bits = c.bits;
  for (auto& bit : out.bits)
    if (rng.uniform() < mutation_prob) bit ^= 1u;
  return out;
}

std::vector<Chromosome> random_population(int population, int order,
                                          int bits_per_weight, Rng& rng) {
  std::vector<Chromosome> pop(static_cast<std::size_t>(population));
  const std::size_t n_bits =
      static_cast<std::size_t>(order) * static_cast<std::size_t>(bits_per_weight);
  for (auto& individual : pop) {
    individual.bits.resize(n_bits);
    for (auto& bit : individual.bits) bit = static_cast<std::uint8_t>(rng.bit());
  }
  return pop;
}

AdaptationResult ga_run(const SampleBuffer& d, const GAConfig& ga,
                        const AleConfig& cfg, Rng& rng) {
  validate(cfg);
  validate(ga);
  const BlockCost cost(d, cfg);

  const auto pop_size = static_cast<std::size_t>(ga.population);
  const auto elite_count = static_cast<std::size_t>(
      std::ceil(ga.parent_fraction * static_cast<double>(ga.population)));

  std::vector<Chromosome> pop =
      random_population(ga.population, cfg.order, ga.bits_per_weight, rng);

  AdaptationResult result;
  Chromosome best;
  std::vector<std::size_t> order_idx(pop_size);
  std::vector<double> elite_costs(elite_count);

  for (int generation = 0; generation < ga.generations; ++generation) {
    for (auto& individual : pop) {
      individual.decoded = decode_chromosome(individual, ga);
      individual.cost = cost(individual.decoded);
    }
    result.evaluations += pop_size;

    // Deterministic order: cost ascending, index breaks ties.
    std::iota(order_idx.begin(), order_idx.end(), std::size_t{0});
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      return pop[a].cost != pop[b].cost ? pop[a].cost < pop[b].cost : a < b;
    });

    if (pop[order_idx[0]].cost < best.cost) best = pop[order_idx[0]];
    result.cost_history.push_back({static_cast<std::size_t>(generation), best.cost});

    if (ga.early_stop_cost && best.cost < *ga.early_stop_cost) break;
    if (generation + 1 == ga.generations) break;

    std::vector<Chromosome> next;
    next.reserve(pop_size);
    for (std::size_t i = 0; i < elite_count; ++i) next.push_back(pop[order_idx[i]]);
    for (std::size_t i = 0; i < elite_count; ++i)
      elite_costs[i] = next[i].cost;

    while (next.size() < pop_size) {
      const std::size_t p1 = roulette_select(elite_costs, rng);
      const std::size_t p2 = roulette_select(elite_costs, rng);
      auto [c1, c2] = crossover(next[p1], next[p2], ga.crossover_prob, rng);
      next.push_back(mutate(c1, ga.mutation_prob, rng));
      if (next.size() < pop_size) next.push_back(mutate(c2, ga.mutation_prob, rng));
    }
    pop = std::move(next);
  }

  result.final_weights = decode_chromosome(best, ga);
  result.filtered = filter_output(d, result.final_weights, cfg);
  result.error = error_signal(d, result.filtered);
  return result;
}

}  // namespace alebench
