#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "alebench/adaptation.hpp"
#include "alebench/ale.hpp"
#include "alebench/channel.hpp"
#include "alebench/ga.hpp"
#include "alebench/lms.hpp"
#include "alebench/metrics.hpp"
#include "alebench/modem.hpp"
#include "alebench/pso.hpp"

namespace alebench {

enum class ExperimentKind {
  lms_step_sweep,
  population_sweep,
  ga_rate_sweep,
  mse_vs_snr,
  ber_vs_snr_awgn,
  ber_vs_snr_random,
};

enum class Algorithm { lms, ga, pso };

/// Which GA rate a ga_rate_sweep varies; the other stays at its configured
/// value.
enum class RateParam { crossover_prob, mutation_prob };

std::string_view to_string(ExperimentKind kind);
std::string_view to_string(Algorithm algo);
std::string_view to_string(RateParam param);
std::optional<ExperimentKind> parse_kind(std::string_view name);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<RateParam> parse_rate_param(std::string_view name);

std::span<const ExperimentKind> all_experiment_kinds();

/// Algorithms a sweep of this kind runs at each grid point.
std::span<const Algorithm> algorithms_for(ExperimentKind kind);

/// Whether sweeps of this kind report BER (SNR-axis BER experiments) or are
/// MSE-only.
bool reports_ber(ExperimentKind kind);

/// Declarative description of one sweep.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::ber_vs_snr_awgn;
  std::vector<double> grid;
  int trials = 10;
  std::uint64_t master_seed = 1;
  std::size_t n_bits = 1000;
  RateParam rate_param = RateParam::crossover_prob;
  /// Only consulted by single-run front ends; sweeps run every algorithm the
  /// kind prescribes.
  std::optional<Algorithm> algorithm;
  ModemConfig modem;
  AleConfig ale;
  NoiseSpec noise;
  LMSConfig lms;
  GAConfig ga;
  PSOConfig pso;
  std::string output_path;
};

void validate(const ExperimentSpec& spec);

/// One result row; optional metrics are absent for MSE-only experiments and
/// for runs that failed (error rows).
struct RunRecord {
  ExperimentKind kind;
  Algorithm algorithm;
  std::string grid_param;
  double grid_value = 0.0;
  std::uint64_t seed = 0;
  double snr_db = 0.0;
  std::optional<double> mse;
  std::optional<double> ber;
  std::optional<std::uint64_t> evaluations;
  std::optional<double> wall_time_ms;
};

/// A fully resolved single pipeline pass: the grid value already applied to
/// the config it sweeps.
struct RunPoint {
  ExperimentKind kind;
  Algorithm algorithm;
  std::string grid_param;
  double grid_value = 0.0;
  int grid_index = 0;
  int trial_index = 0;
  std::size_t n_bits = 1000;
  bool nonlinear = false;
  ModemConfig modem;
  AleConfig ale;
  NoiseSpec noise;
  LMSConfig lms;
  GAConfig ga;
  PSOConfig pso;
};

RunPoint resolve_point(const ExperimentSpec& spec, Algorithm algo, int grid_index,
                       int trial_index);

/// Per-trial seed derived from (master_seed, kind, trial index). Role streams
/// (bit generation, channel, GA, PSO) are derived from it inside run_single,
/// so algorithms and grid points of the same trial share the same signal and
/// noise realization (paired comparisons), and changing one algorithm's
/// config never perturbs the others' streams.
std::uint64_t run_seed(std::uint64_t master_seed, ExperimentKind kind,
                       int trial_index);

/// Full result of one pipeline pass, for diagnostics and tests; only `record`
/// is ever persisted.
struct PipelineResult {
  RunRecord record;
  BitStream tx_bits;
  BitStream rx_bits;
  SampleBuffer clean;
  SampleBuffer noisy;
  AdaptationResult adaptation;
  double mse_vs_clean = 0.0;  // filtered output against the clean signal
};

RunRecord run_single(const RunPoint& point, std::uint64_t seed);
PipelineResult run_single_detailed(const RunPoint& point, std::uint64_t seed);

/// Cartesian product grid x algorithms x trials, ordered grid-major, then
/// algorithm, then trial. Failed points become error rows (metrics absent)
/// and the sweep continues. jobs = 0 uses all available processors.
std::vector<RunRecord> run_sweep(const ExperimentSpec& spec, unsigned jobs = 0);

enum class Metric { mse, ber };

/// Mean of the chosen metric per (algorithm, grid_value), in first-seen grid
/// order; rows without the metric are skipped and `trials` counts the rows
/// actually averaged.
std::vector<MetricPoint> aggregate_mean(std::span<const RunRecord> records,
                                        Metric metric);

}  // namespace alebench
