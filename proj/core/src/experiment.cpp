#include "alebench/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <mutex>
#include <thread>

namespace alebench {

namespace {

constexpr ExperimentKind kAllKinds[] = {
    ExperimentKind::lms_step_sweep, ExperimentKind::population_sweep,
    ExperimentKind::ga_rate_sweep,  ExperimentKind::mse_vs_snr,
    ExperimentKind::ber_vs_snr_awgn, ExperimentKind::ber_vs_snr_random,
};

constexpr Algorithm kLmsOnly[] = {Algorithm::lms};
constexpr Algorithm kGaOnly[] = {Algorithm::ga};
constexpr Algorithm kGaPso[] = {Algorithm::ga, Algorithm::pso};
constexpr Algorithm kAllAlgorithms[] = {Algorithm::lms, Algorithm::ga, Algorithm::pso};

// Role tags for sub-stream derivation.
constexpr std::uint64_t kRoleBits = 0xb175;
constexpr std::uint64_t kRoleChannel = 0xc4a2;
constexpr std::uint64_t kRoleGa = 0x6a01;
constexpr std::uint64_t kRolePso = 0x9502;

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::lms_step_sweep: return "lms_step_sweep";
    case ExperimentKind::population_sweep: return "population_sweep";
    case ExperimentKind::ga_rate_sweep: return "ga_rate_sweep";
    case ExperimentKind::mse_vs_snr: return "mse_vs_snr";
    case ExperimentKind::ber_vs_snr_awgn: return "ber_vs_snr_awgn";
    case ExperimentKind::ber_vs_snr_random: return "ber_vs_snr_random";
  }
  return "?";
}

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::lms: return "lms";
    case Algorithm::ga: return "ga";
    case Algorithm::pso: return "pso";
  }
  return "?";
}

std::string_view to_string(RateParam param) {
  return param == RateParam::crossover_prob ? "crossover_prob" : "mutation_prob";
}

std::optional<ExperimentKind> parse_kind(std::string_view name) {
  for (const ExperimentKind kind : kAllKinds)
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const Algorithm algo : kAllAlgorithms)
    if (to_string(algo) == name) return algo;
  return std::nullopt;
}

std::optional<RateParam> parse_rate_param(std::string_view name) {
  if (name == "crossover_prob") return RateParam::crossover_prob;
  if (name == "mutation_prob") return RateParam::mutation_prob;
  return std::nullopt;
}

std::span<const ExperimentKind> all_experiment_kinds() { return kAllKinds; }

std::span<const Algorithm> algorithms_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::lms_step_sweep: return kLmsOnly;
    case ExperimentKind::population_sweep: return kGaPso;
    case ExperimentKind::ga_rate_sweep: return kGaOnly;
    default: return kAllAlgorithms;
  }
}

bool reports_ber(ExperimentKind kind) {
  return kind == ExperimentKind::ber_vs_snr_awgn ||
         kind == ExperimentKind::ber_vs_snr_random;
}

namespace {

bool kind_has_snr_grid(ExperimentKind kind) {
  return kind == ExperimentKind::mse_vs_snr ||
         kind == ExperimentKind::ber_vs_snr_awgn ||
         kind == ExperimentKind::ber_vs_snr_random;
}

void validate_grid_value(const ExperimentSpec& spec, double value) {
  switch (spec.kind) {
    case ExperimentKind::lms_step_sweep:
      if (!(value > 0.0) || !std::isfinite(value))
        throw ConfigError("grid: step sizes must be finite and > 0");
      break;
    case ExperimentKind::population_sweep: {
      if (value != std::floor(value) || value < 4.0)
        throw ConfigError("grid: population sizes must be integers >= 4");
      break;
    }
    case ExperimentKind::ga_rate_sweep:
      if (!(value >= 0.0) || !(value <= 1.0))
        throw ConfigError("grid: probabilities must lie in [0, 1]");
      break;
    default:
      if (std::isnan(value) || (std::isinf(value) && value < 0.0))
        throw ConfigError("grid: SNR values must be finite or +inf");
      break;
  }
}

}  // namespace

void validate(const ExperimentSpec& spec) {
  if (spec.grid.empty()) throw ConfigError("grid must be non-empty");
  for (const double value : spec.grid) validate_grid_value(spec, value);
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");
  if (spec.n_bits == 0) throw ConfigError("n_bits must be >= 1");
  validate(spec.modem);
  validate(spec.ale);
  validate(spec.noise);
  validate(spec.lms);
  validate(spec.ga);
  validate(spec.pso);
  if (!kind_has_snr_grid(spec.kind) && std::isnan(spec.noise.snr_db))
    throw ConfigError("noise.snr_db is required for experiment " +
                      std::string(to_string(spec.kind)));
}

std::uint64_t run_seed(std::uint64_t master_seed, ExperimentKind kind,
                       int trial_index) {
  const std::uint64_t seed =
      derive_seed(master_seed, static_cast<std::uint64_t>(kind) + 1);
  return derive_seed(seed, static_cast<std::uint64_t>(trial_index));
}

RunPoint resolve_point(const ExperimentSpec& spec, Algorithm algo, int grid_index,
                       int trial_index) {
  if (grid_index < 0 || static_cast<std::size_t>(grid_index) >= spec.grid.size())
    throw std::invalid_argument("resolve_point: grid index out of range");
  const double value = spec.grid[static_cast<std::size_t>(grid_index)];

  RunPoint point;
  point.kind = spec.kind;
  point.algorithm = algo;
  point.grid_value = value;
  point.grid_index = grid_index;
  point.trial_index = trial_index;
  point.n_bits = spec.n_bits;
  point.modem = spec.modem;
  point.ale = spec.ale;
  point.noise = spec.noise;
  point.lms = spec.lms;
  point.ga = spec.ga;
  point.pso = spec.pso;

  switch (spec.kind) {
    case ExperimentKind::lms_step_sweep:
      point.grid_param = "step_size";
      point.lms.step_size = value;
      break;
    case ExperimentKind::population_sweep:
      point.grid_param = "population";
      point.ga.population = static_cast<int>(value);
      point.pso.particles = static_cast<int>(value);
      break;
    case ExperimentKind::ga_rate_sweep:
      point.grid_param = std::string(to_string(spec.rate_param));
      if (spec.rate_param == RateParam::crossover_prob)
        point.ga.crossover_prob = value;
      else
        point.ga.mutation_prob = value;
      break;
    default:
      point.grid_param = "snr_db";
      point.noise.snr_db = value;
      break;
  }

  switch (spec.kind) {
    case ExperimentKind::mse_vs_snr:
    case ExperimentKind::ber_vs_snr_awgn:
      point.nonlinear = false;
      break;
    case ExperimentKind::ber_vs_snr_random:
      point.nonlinear = true;
      break;
    default:
      point.nonlinear = spec.noise.nonlinear_enabled;
      break;
  }

  if (std::isnan(point.noise.snr_db))
    throw ConfigError("noise.snr_db is required for experiment " +
                      std::string(to_string(spec.kind)));
  return point;
}

PipelineResult run_single_detailed(const RunPoint& point, std::uint64_t seed) {
  validate(point.modem);
  validate(point.ale);
  validate(point.noise);

  Rng rng_bits(derive_seed(seed, kRoleBits));
  Rng rng_channel(derive_seed(seed, kRoleChannel));

  PipelineResult out;
  out.tx_bits = generate_bits(point.n_bits, rng_bits);
  out.clean = modulate(out.tx_bits, point.modem);
  const double clean_power = measure_power(out.clean);

  if (point.nonlinear) {
    const SampleBuffer distorted =
        add_nonlinear_noise(out.clean, point.noise, rng_channel);
    out.noisy = add_awgn_ref(distorted, clean_power, point.noise.snr_db, rng_channel);
  } else {
    out.noisy = add_awgn_ref(out.clean, clean_power, point.noise.snr_db, rng_channel);
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    switch (point.algorithm) {
      case Algorithm::lms:
        out.adaptation = lms_run(out.noisy, point.lms, point.ale);
        break;
      case Algorithm::ga: {
        Rng rng_ga(derive_seed(seed, kRoleGa));
        out.adaptation = ga_run(out.noisy, point.ga, point.ale, rng_ga);
        break;
      }
      case Algorithm::pso: {
        Rng rng_pso(derive_seed(seed, kRolePso));
        out.adaptation = pso_run(out.noisy, point.pso, point.ale, rng_pso);
        break;
      }
    }
  } catch (const DivergenceError& e) {
    throw DivergenceError(std::string(to_string(point.kind)) + "/" +
                              std::string(to_string(point.algorithm)) + " " +
                              point.grid_param + "=" +
                              std::to_string(point.grid_value) + " seed=" +
                              std::to_string(seed) + ": " + e.what(),
                          e.sample_index());
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  out.rx_bits = demodulate(out.adaptation.filtered, point.modem);
  out.mse_vs_clean = mse(out.clean, out.adaptation.filtered);

  RunRecord& rec = out.record;
  rec.kind = point.kind;
  rec.algorithm = point.algorithm;
  rec.grid_param = point.grid_param;
  rec.grid_value = point.grid_value;
  rec.seed = seed;
  rec.snr_db = point.noise.snr_db;
  rec.mse = mse(out.noisy, out.adaptation.filtered);
  if (reports_ber(point.kind)) rec.ber = ber(out.tx_bits, out.rx_bits);
  rec.evaluations = out.adaptation.evaluations;
  rec.wall_time_ms =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return out;
}

RunRecord run_single(const RunPoint& point, std::uint64_t seed) {
  return run_single_detailed(point, seed).record;
}

std::vector<RunRecord> run_sweep(const ExperimentSpec& spec, unsigned jobs) {
  validate(spec);
  const std::span<const Algorithm> algos = algorithms_for(spec.kind);
  const std::size_t total =
      spec.grid.size() * algos.size() * static_cast<std::size_t>(spec.trials);

  std::vector<RunRecord> records(total);
  std::mutex log_mutex;

  const auto run_job = [&](std::size_t job) {
    const auto per_grid = algos.size() * static_cast<std::size_t>(spec.trials);
    const int grid_index = static_cast<int>(job / per_grid);
    const std::size_t rest = job % per_grid;
    const Algorithm algo = algos[rest / static_cast<std::size_t>(spec.trials)];
    const int trial = static_cast<int>(rest % static_cast<std::size_t>(spec.trials));

    const RunPoint point = resolve_point(spec, algo, grid_index, trial);
    const std::uint64_t seed = run_seed(spec.master_seed, spec.kind, trial);
    try {
      records[job] = run_single(point, seed);
    } catch (const std::exception& e) {
      RunRecord& rec = records[job];
      rec.kind = point.kind;
      rec.algorithm = point.algorithm;
      rec.grid_param = point.grid_param;
      rec.grid_value = point.grid_value;
      rec.seed = seed;
      rec.snr_db = point.noise.snr_db;
      std::scoped_lock lock(log_mutex);
      std::cerr << "alebench: error row (" << to_string(point.kind) << "/"
                << to_string(algo) << " " << point.grid_param << "="
                << point.grid_value << " trial=" << trial << "): " << e.what()
                << "\n";
    }
  };

  unsigned workers = jobs != 0 ? jobs : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

  if (workers <= 1) {
    for (std::size_t job = 0; job < total; ++job) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t job = next.fetch_add(1);
          if (job >= total) return;
          run_job(job);
        }
      });
    for (auto& worker : pool) worker.join();
  }
  return records;
}

std::vector<MetricPoint> aggregate_mean(std::span<const RunRecord> records,
                                        Metric metric) {
  std::vector<MetricPoint> points;
  std::vector<double> sums;
  for (const RunRecord& rec : records) {
    const std::optional<double>& value = metric == Metric::mse ? rec.mse : rec.ber;
    if (!value) continue;
    const std::string series(to_string(rec.algorithm));
    bool found = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].series == series && points[i].x == rec.grid_value) {
        sums[i] += *value;
        ++points[i].trials;
        found = true;
        break;
      }
    }
    if (!found) {
      points.push_back({rec.grid_value, 0.0, series, 1});
      sums.push_back(*value);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    points[i].y = sums[i] / points[i].trials;
  return points;
}

}  // namespace alebench
