#include <doctest.h>

#include <map>

#include "alebench/experiment.hpp"

using namespace alebench;

namespace {

std::map<std::string, std::vector<double>> curves(
    const std::vector<RunRecord>& records, Metric metric,
    const std::vector<double>& grid) {
  std::map<std::pair<std::string, double>, double> table;
  for (const MetricPoint& p : aggregate_mean(records, metric))
    table[{p.series, p.x}] = p.y;
  std::map<std::string, std::vector<double>> out;
  for (const char* algo : {"lms", "ga", "pso"})
    for (const double x : grid)
      if (table.count({algo, x})) out[algo].push_back(table.at({algo, x}));
  return out;
}

}  // namespace

TEST_CASE("desk-scale AWGN sweeps have the expected SNR trends") {
  ExperimentSpec spec;
  spec.master_seed = 9001;
  spec.grid = {-10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10};
  spec.trials = 10;

  SUBCASE("mean MSE is non-increasing in SNR for every algorithm") {
    spec.kind = ExperimentKind::mse_vs_snr;
    const auto mse_curves = curves(run_sweep(spec), Metric::mse, spec.grid);
    REQUIRE(mse_curves.size() == 3);
    for (const auto& [algo, ys] : mse_curves) {
      REQUIRE(ys.size() == spec.grid.size());
      for (std::size_t i = 1; i < ys.size(); ++i) {
        INFO(algo, " at grid index ", i);
        CHECK(ys[i] <= ys[i - 1]);
      }
    }
  }

  SUBCASE("mean BER decreases in SNR until it reaches the zero floor") {
    spec.kind = ExperimentKind::ber_vs_snr_awgn;
    const auto ber_curves = curves(run_sweep(spec), Metric::ber, spec.grid);
    REQUIRE(ber_curves.size() == 3);
    for (const auto& [algo, ys] : ber_curves) {
      REQUIRE(ys.size() == spec.grid.size());
      for (std::size_t i = 1; i < ys.size(); ++i) {
        INFO(algo, " at grid index ", i);
        if (ys[i - 1] > 0.0)
          CHECK(ys[i] < ys[i - 1]);
        else
          CHECK(ys[i] == 0.0);
      }
    }
  }
}
