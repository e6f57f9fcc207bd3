// alebench: run ALE noise-cancellation experiments from a JSON config and
// persist results as CSV. Subcommands: run, sweep, list-experiments.
// stdout carries only data (CSV or --dry-run JSON); diagnostics go to stderr.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "alebench/config_json.hpp"
#include "alebench/csv.hpp"
#include "alebench/experiment.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  bool dry_run = false;
};

alebench::ExperimentSpec load_spec(const CommonArgs& args) {
  alebench::ExperimentSpec spec;
  if (!args.config_path.empty())
    spec = alebench::spec_from_json_file(args.config_path);
  if (args.seed) spec.master_seed = *args.seed;  // flags override the file
  return spec;
}

int run_command(const CommonArgs& args, const std::string& algorithm_flag,
                std::optional<double> snr_db_flag) {
  alebench::ExperimentSpec spec = load_spec(args);

  if (!algorithm_flag.empty())
    spec.algorithm = alebench::parse_algorithm(algorithm_flag);
  if (!spec.algorithm)
    throw alebench::ConfigError(
        "algorithm: required for 'run' (--algorithm or config key 'algorithm')");
  if (snr_db_flag) spec.noise.snr_db = *snr_db_flag;
  if (std::isnan(spec.noise.snr_db))
    throw alebench::ConfigError(
        "noise.snr_db: required for 'run' (--snr-db or config key 'noise.snr_db')");

  // A single pass is grid point 0, trial 0 of a one-point SNR grid.
  spec.grid = {spec.noise.snr_db};
  spec.trials = 1;

  if (args.dry_run) {
    std::cout << alebench::spec_to_json_text(spec);
    return 0;
  }

  const alebench::RunPoint point =
      alebench::resolve_point(spec, *spec.algorithm, 0, 0);
  const std::uint64_t seed =
      alebench::run_seed(spec.master_seed, spec.kind, 0);
  const alebench::RunRecord record = alebench::run_single(point, seed);
  std::cout << alebench::kCsvHeader << '\n' << alebench::to_csv_row(record) << '\n';
  return 0;
}

int sweep_command(const CommonArgs& args, const std::string& experiment,
                  const std::string& output_flag, std::optional<int> trials_flag,
                  unsigned jobs) {
  alebench::ExperimentSpec spec = load_spec(args);

  const auto kind = alebench::parse_kind(experiment);
  if (!kind)
    throw alebench::ConfigError("--experiment: unknown experiment kind '" +
                                experiment + "'");
  spec.kind = *kind;
  if (trials_flag) spec.trials = *trials_flag;
  if (!output_flag.empty()) spec.output_path = output_flag;
  if (spec.output_path.empty())
    spec.output_path = std::string(alebench::to_string(spec.kind)) + ".csv";

  if (spec.grid.empty()) {
    // Per-kind default grids so a bare `sweep --experiment ...` is useful.
    switch (*kind) {
      case alebench::ExperimentKind::lms_step_sweep:
        spec.grid = {0.001, 0.005, 0.01};
        break;
      case alebench::ExperimentKind::population_sweep:
        spec.grid = {10, 20, 30, 60, 90, 110, 140, 150};
        break;
      case alebench::ExperimentKind::ga_rate_sweep:
        spec.grid = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
        break;
      default:
        spec.grid = {-10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10};
        break;
    }
  }

  if (args.dry_run) {
    std::cout << alebench::spec_to_json_text(spec);
    return 0;
  }

  const std::vector<alebench::RunRecord> records = alebench::run_sweep(spec, jobs);
  alebench::write_csv(records, spec.output_path);
  std::cerr << "alebench: wrote " << records.size() << " records to "
            << spec.output_path << "\n";
  return 0;
}

int list_command() {
  for (const alebench::ExperimentKind kind : alebench::all_experiment_kinds())
    std::cout << alebench::to_string(kind) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive line enhancer noise-cancellation benchmark"};
  app.require_subcommand(1);

  CommonArgs run_args, sweep_args;
  std::string run_algorithm;
  std::optional<double> run_snr_db;

  std::string sweep_experiment, sweep_output;
  std::optional<int> sweep_trials;
  unsigned sweep_jobs = 0;

  CLI::App* run = app.add_subcommand(
      "run", "Execute one pipeline pass and print its record as CSV on stdout");
  run->add_option("--config", run_args.config_path, "JSON config file");
  run->add_option("--algorithm", run_algorithm, "Adaptation algorithm")
      ->check(CLI::IsMember({"lms", "ga", "pso"}));
  run->add_option("--snr-db", run_snr_db, "Channel SNR in dB");
  run->add_option("--seed", run_args.seed, "Master seed (overrides config)");
  run->add_flag("--dry-run", run_args.dry_run,
                "Print the fully resolved spec as JSON and exit");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run one experiment over its grid and write a CSV file");
  sweep->add_option("--config", sweep_args.config_path, "JSON config file");
  sweep
      ->add_option("--experiment", sweep_experiment,
                   "Experiment kind (see list-experiments)")
      ->required();
  sweep->add_option("--seed", sweep_args.seed, "Master seed (overrides config)");
  sweep->add_option("--output", sweep_output, "Output CSV path");
  sweep->add_option("--trials", sweep_trials, "Seeds per grid point")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", sweep_jobs,
                    "Worker thread cap (default: available processors)");
  sweep->add_flag("--dry-run", sweep_args.dry_run,
                  "Print the fully resolved spec as JSON and exit");

  CLI::App* list = app.add_subcommand("list-experiments",
                                      "Print the available experiment kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (run->parsed()) return run_command(run_args, run_algorithm, run_snr_db);
    if (sweep->parsed())
      return sweep_command(sweep_args, sweep_experiment, sweep_output, sweep_trials,
                           sweep_jobs);
    if (list->parsed()) return list_command();
  } catch (const alebench::ConfigError& e) {
    std::cerr << "alebench: config error: " << e.what() << "\n";
    return 1;
  } catch (const alebench::DivergenceError& e) {
    std::cerr << "alebench: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "alebench: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
