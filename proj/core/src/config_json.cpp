#include "alebench/config_json.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace alebench {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

const json& expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::array<double, 2> get_range(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [lo, hi]");
  return {get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]")};
}

/// Walks the object's keys against a handler table; anything unhandled is an
/// unknown key.
template <typename Handlers>
void apply_object(const json& j, const std::string& path, const Handlers& handlers) {
  expect_object(j, path);
  for (const auto& [key, value] : j.items()) {
    const std::string key_path = path.empty() ? key : path + "." + key;
    bool handled = false;
    for (const auto& [name, fn] : handlers) {
      if (key == name) {
        fn(value, key_path);
        handled = true;
        break;
      }
    }
    if (!handled) throw ConfigError("unknown key: " + key_path);
  }
}

using Handler = std::pair<const char*, std::function<void(const json&, const std::string&)>>;

void load_modem(const json& j, const std::string& path, ModemConfig& cfg) {
  const std::vector<Handler> handlers{
      {"psk_order", [&](const json& v, const std::string& p) { cfg.psk_order = get_int(v, p); }},
      {"samples_per_symbol",
       [&](const json& v, const std::string& p) { cfg.samples_per_symbol = get_int(v, p); }},
      {"carrier_freq",
       [&](const json& v, const std::string& p) { cfg.carrier_freq = get_number(v, p); }},
      {"amplitude",
       [&](const json& v, const std::string& p) { cfg.amplitude = get_number(v, p); }},
      {"nominal_rf_hz",
       [&](const json& v, const std::string& p) { cfg.nominal_rf_hz = get_number(v, p); }},
  };
  apply_object(j, path, handlers);
}

void load_ale(const json& j, const std::string& path, AleConfig& cfg) {
  const std::vector<Handler> handlers{
      {"order", [&](const json& v, const std::string& p) { cfg.order = get_int(v, p); }},
      {"delay", [&](const json& v, const std::string& p) { cfg.delay = get_int(v, p); }},
  };
  apply_object(j, path, handlers);
}

void load_noise(const json& j, const std::string& path, NoiseSpec& cfg) {
  const std::vector<Handler> handlers{
      {"snr_db", [&](const json& v, const std::string& p) { cfg.snr_db = get_number(v, p); }},
      {"nonlinear_enabled",
       [&](const json& v, const std::string& p) { cfg.nonlinear_enabled = get_bool(v, p); }},
      {"cubic_gain",
       [&](const json& v, const std::string& p) { cfg.cubic_gain = get_number(v, p); }},
      {"tone_count",
       [&](const json& v, const std::string& p) { cfg.tone_count = get_int(v, p); }},
      {"tone_amp_range",
       [&](const json& v, const std::string& p) { cfg.tone_amp_range = get_range(v, p); }},
      {"tone_freq_range",
       [&](const json& v, const std::string& p) { cfg.tone_freq_range = get_range(v, p); }},
  };
  apply_object(j, path, handlers);
}

void load_lms(const json& j, const std::string& path, LMSConfig& cfg) {
  const std::vector<Handler> handlers{
      {"step_size",
       [&](const json& v, const std::string& p) { cfg.step_size = get_number(v, p); }},
      {"initial_weights",
       [&](const json& v, const std::string& p) {
         if (!v.is_array()) fail(p, "expected an array of numbers");
         cfg.initial_weights.clear();
         for (std::size_t i = 0; i < v.size(); ++i)
           cfg.initial_weights.push_back(
               get_number(v[i], p + "[" + std::to_string(i) + "]"));
       }},
  };
  apply_object(j, path, handlers);
}

void load_ga(const json& j, const std::string& path, GAConfig& cfg) {
  const std::vector<Handler> handlers{
      {"population",
       [&](const json& v, const std::string& p) { cfg.population = get_int(v, p); }},
      {"generations",
       [&](const json& v, const std::string& p) { cfg.generations = get_int(v, p); }},
      {"bits_per_weight",
       [&](const json& v, const std::string& p) { cfg.bits_per_weight = get_int(v, p); }},
      {"weight_range",
       [&](const json& v, const std::string& p) { cfg.weight_range = get_range(v, p); }},
      {"crossover_prob",
       [&](const json& v, const std::string& p) { cfg.crossover_prob = get_number(v, p); }},
      {"mutation_prob",
       [&](const json& v, const std::string& p) { cfg.mutation_prob = get_number(v, p); }},
      {"parent_fraction",
       [&](const json& v, const std::string& p) { cfg.parent_fraction = get_number(v, p); }},
      {"early_stop_cost",
       [&](const json& v, const std::string& p) {
         if (v.is_null())
           cfg.early_stop_cost.reset();
         else
           cfg.early_stop_cost = get_number(v, p);
       }},
  };
  apply_object(j, path, handlers);
}

void load_pso(const json& j, const std::string& path, PSOConfig& cfg) {
  const std::vector<Handler> handlers{
      {"particles",
       [&](const json& v, const std::string& p) { cfg.particles = get_int(v, p); }},
      {"iterations",
       [&](const json& v, const std::string& p) { cfg.iterations = get_int(v, p); }},
      {"c1", [&](const json& v, const std::string& p) { cfg.c1 = get_number(v, p); }},
      {"c2", [&](const json& v, const std::string& p) { cfg.c2 = get_number(v, p); }},
      {"inertia",
       [&](const json& v, const std::string& p) { cfg.inertia = get_number(v, p); }},
      {"v_max", [&](const json& v, const std::string& p) { cfg.v_max = get_number(v, p); }},
      {"init_range",
       [&](const json& v, const std::string& p) { cfg.init_range = get_range(v, p); }},
  };
  apply_object(j, path, handlers);
}

}  // namespace

ExperimentSpec spec_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }

  ExperimentSpec spec;
  const std::vector<Handler> handlers{
      {"kind",
       [&](const json& v, const std::string& p) {
         const auto kind = parse_kind(get_string(v, p));
         if (!kind) fail(p, "unknown experiment kind");
         spec.kind = *kind;
       }},
      {"grid",
       [&](const json& v, const std::string& p) {
         if (!v.is_array()) fail(p, "expected an array of numbers");
         spec.grid.clear();
         for (std::size_t i = 0; i < v.size(); ++i)
           spec.grid.push_back(get_number(v[i], p + "[" + std::to_string(i) + "]"));
       }},
      {"trials",
       [&](const json& v, const std::string& p) { spec.trials = get_int(v, p); }},
      {"master_seed",
       [&](const json& v, const std::string& p) {
         if (!v.is_number_unsigned() && !v.is_number_integer())
           fail(p, "expected an unsigned integer");
         spec.master_seed = v.get<std::uint64_t>();
       }},
      {"n_bits",
       [&](const json& v, const std::string& p) {
         const int n = get_int(v, p);
         if (n < 1) fail(p, "must be >= 1");
         spec.n_bits = static_cast<std::size_t>(n);
       }},
      {"rate_param",
       [&](const json& v, const std::string& p) {
         const auto param = parse_rate_param(get_string(v, p));
         if (!param) fail(p, "expected 'crossover_prob' or 'mutation_prob'");
         spec.rate_param = *param;
       }},
      {"algorithm",
       [&](const json& v, const std::string& p) {
         const auto algo = parse_algorithm(get_string(v, p));
         if (!algo) fail(p, "expected 'lms', 'ga' or 'pso'");
         spec.algorithm = *algo;
       }},
      {"output_path",
       [&](const json& v, const std::string& p) { spec.output_path = get_string(v, p); }},
      {"modem", [&](const json& v, const std::string& p) { load_modem(v, p, spec.modem); }},
      {"ale", [&](const json& v, const std::string& p) { load_ale(v, p, spec.ale); }},
      {"noise", [&](const json& v, const std::string& p) { load_noise(v, p, spec.noise); }},
      {"lms", [&](const json& v, const std::string& p) { load_lms(v, p, spec.lms); }},
      {"ga", [&](const json& v, const std::string& p) { load_ga(v, p, spec.ga); }},
      {"pso", [&](const json& v, const std::string& p) { load_pso(v, p, spec.pso); }},
  };
  apply_object(j, "", handlers);
  return spec;
}

ExperimentSpec spec_from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return spec_from_json_text(buffer.str(), path);
}

std::string spec_to_json_text(const ExperimentSpec& spec) {
  json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["grid"] = spec.grid;
  j["trials"] = spec.trials;
  j["master_seed"] = spec.master_seed;
  j["n_bits"] = spec.n_bits;
  j["rate_param"] = std::string(to_string(spec.rate_param));
  if (spec.algorithm) j["algorithm"] = std::string(to_string(*spec.algorithm));
  if (!spec.output_path.empty()) j["output_path"] = spec.output_path;

  j["modem"] = {{"psk_order", spec.modem.psk_order},
                {"samples_per_symbol", spec.modem.samples_per_symbol},
                {"carrier_freq", spec.modem.carrier_freq},
                {"amplitude", spec.modem.amplitude},
                {"nominal_rf_hz", spec.modem.nominal_rf_hz}};
  j["ale"] = {{"order", spec.ale.order}, {"delay", spec.ale.delay}};
  json noise = {{"nonlinear_enabled", spec.noise.nonlinear_enabled},
                {"cubic_gain", spec.noise.cubic_gain},
                {"tone_count", spec.noise.tone_count},
                {"tone_amp_range", spec.noise.tone_amp_range},
                {"tone_freq_range", spec.noise.tone_freq_range}};
  if (!std::isnan(spec.noise.snr_db)) noise["snr_db"] = spec.noise.snr_db;
  j["noise"] = std::move(noise);
  j["lms"] = {{"step_size", spec.lms.step_size},
              {"initial_weights", spec.lms.initial_weights}};
  json ga = {{"population", spec.ga.population},
             {"generations", spec.ga.generations},
             {"bits_per_weight", spec.ga.bits_per_weight},
             {"weight_range", spec.ga.weight_range},
             {"crossover_prob", spec.ga.crossover_prob},
             {"mutation_prob", spec.ga.mutation_prob},
             {"parent_fraction", spec.ga.parent_fraction}};
  if (spec.ga.early_stop_cost) ga["early_stop_cost"] = *spec.ga.early_stop_cost;
  j["ga"] = std::move(ga);
  j["pso"] = {{"particles", spec.pso.particles},
              {"iterations", spec.pso.iterations},
              {"c1", spec.pso.c1},
              {"c2", spec.pso.c2},
              {"inertia", spec.pso.inertia},
              {"v_max", spec.pso.v_max},
              {"init_range", spec.pso.init_range}};
  return j.dump(2) + "\n";
}

}  // namespace alebench
