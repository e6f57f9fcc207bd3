#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* cli_path() {
  const char* path = std::getenv("ALEBENCH_CLI");
  REQUIRE_MESSAGE(path != nullptr, "ALEBENCH_CLI must point at the alebench binary");
  return path;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("alebench_cli_out_" + std::to_string(counter));
  const fs::path err = dir / ("alebench_cli_err_" + std::to_string(counter));
  ++counter;

  const std::string command = std::string(cli_path()) + " " + args + " > " +
                              out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

/// CSV text with the wall_time_ms column (the only non-deterministic field)
/// blanked out.
std::string mask_wall_time(const std::string& csv) {
  std::string masked;
  for (const std::string& line : lines_of(csv)) {
    const std::size_t cut = line.rfind(',');
    masked += line.substr(0, cut + 1);
    masked += '\n';
  }
  return masked;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const char* name) : path(fs::temp_directory_path() / name) {}
  ~TempFile() { fs::remove(path); }
};

}  // namespace

TEST_CASE("list-experiments prints the six kinds") {
  const CliResult result = run_cli("list-experiments");
  CHECK(result.exit_code == 0);
  CHECK(lines_of(result.out) ==
        std::vector<std::string>{"lms_step_sweep", "population_sweep",
                                 "ga_rate_sweep", "mse_vs_snr", "ber_vs_snr_awgn",
                                 "ber_vs_snr_random"});
}

TEST_CASE("unknown subcommands and flag values exit 2 with usage on stderr") {
  CliResult result = run_cli("frobnicate");
  CHECK(result.exit_code == 2);
  CHECK(result.out.empty());
  CHECK(!result.err.empty());

  result = run_cli("run --algorithm banana");
  CHECK(result.exit_code == 2);
  CHECK(result.out.empty());
  CHECK(!result.err.empty());

  result = run_cli("sweep --bogus-flag 1");
  CHECK(result.exit_code == 2);

  result = run_cli("sweep");  // --experiment is required
  CHECK(result.exit_code == 2);
}

TEST_CASE("run prints one CSV row on stdout") {
  const CliResult result = run_cli("run --algorithm lms --snr-db 10 --seed 5");
  CHECK(result.exit_code == 0);
  const auto lines = lines_of(result.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("experiment,algorithm,", 0) == 0);
  CHECK(lines[1].find("lms") != std::string::npos);

  // Determinism: the data fields repeat exactly.
  const CliResult again = run_cli("run --algorithm lms --snr-db 10 --seed 5");
  CHECK(mask_wall_time(again.out) == mask_wall_time(result.out));
}

TEST_CASE("run without an algorithm is a config error (exit 1)") {
  const CliResult result = run_cli("run --snr-db 10");
  CHECK(result.exit_code == 1);
  CHECK(result.out.empty());
  CHECK(result.err.find("algorithm") != std::string::npos);
}

TEST_CASE("a diverging run exits 1 with context on stderr") {
  TempFile config("alebench_cli_diverge.json");
  std::ofstream(config.path) << R"({"lms": {"step_size": 10.0}})";
  const CliResult result = run_cli("run --algorithm lms --snr-db 0 --config " +
                                   config.path.string());
  CHECK(result.exit_code == 1);
  CHECK(result.out.empty());
  CHECK(result.err.find("diverged") != std::string::npos);
}

TEST_CASE("config errors exit 1 and name the offending key") {
  TempFile config("alebench_cli_badkey.json");
  std::ofstream(config.path) << R"({"ga": {"populaton": 10}})";
  const CliResult result =
      run_cli("run --algorithm lms --snr-db 0 --config " + config.path.string());
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("ga.populaton") != std::string::npos);
}

TEST_CASE("sweep writes a deterministic CSV file") {
  TempFile config("alebench_cli_sweep.json");
  std::ofstream(config.path) << R"({
    "grid": [0, 4],
    "trials": 2,
    "n_bits": 50,
    "ga": {"population": 8, "generations": 3},
    "pso": {"particles": 4, "iterations": 3}
  })";
  TempFile out_a("alebench_cli_sweep_a.csv");
  TempFile out_b("alebench_cli_sweep_b.csv");

  const std::string base = "sweep --experiment ber_vs_snr_awgn --config " +
                           config.path.string() + " --seed 7 --output ";
  CliResult result = run_cli(base + out_a.path.string());
  CHECK(result.exit_code == 0);
  CHECK(result.out.empty());  // data goes to the file, logs to stderr

  result = run_cli(base + out_b.path.string());
  CHECK(result.exit_code == 0);

  const std::string csv_a = slurp(out_a.path);
  const std::string csv_b = slurp(out_b.path);
  CHECK(!csv_a.empty());
  CHECK(lines_of(csv_a).size() == 13u);  // header + 2 grid x 3 algos x 2 trials
  CHECK(mask_wall_time(csv_a) == mask_wall_time(csv_b));
}

TEST_CASE("dry-run prints the resolved spec without executing") {
  const CliResult result =
      run_cli("sweep --experiment mse_vs_snr --dry-run --seed 9");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("\"kind\": \"mse_vs_snr\"") != std::string::npos);
  CHECK(result.out.find("\"master_seed\": 9") != std::string::npos);
}
