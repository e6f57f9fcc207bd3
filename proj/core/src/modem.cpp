#include "alebench/modem.hpp"

#include <cmath>
#include <iostream>

namespace alebench {

void validate(const ModemConfig& cfg) {
  if (cfg.psk_order < 2 || (cfg.psk_order & (cfg.psk_order - 1)) != 0)
    throw ConfigError("modem.psk_order must be a power of two >= 2");
  if (cfg.samples_per_symbol < 2)
    throw ConfigError("modem.samples_per_symbol must be >= 2");
  if (!(cfg.carrier_freq > 0.0) || !(cfg.carrier_freq < 0.5))
    throw ConfigError("modem.carrier_freq must lie in (0, 0.5) cycles/sample");
  if (!(cfg.amplitude > 0.0)) throw ConfigError("modem.amplitude must be > 0");
  if (!(cfg.nominal_rf_hz >= 0.0))
    throw ConfigError("modem.nominal_rf_hz must be >= 0");
}

namespace {

void require_bpsk(const ModemConfig& cfg) {
  validate(cfg);
  if (cfg.psk_order != 2)
    throw ConfigError("only BPSK (psk_order = 2) is implemented, got psk_order = " +
                      std::to_string(cfg.psk_order));
}

}  // namespace

BitStream generate_bits(std::size_t n_bits, Rng& rng) {
  BitStream bits(n_bits);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bit());
  return bits;
}

SampleBuffer modulate(const BitStream& bits, const ModemConfig& cfg) {
  require_bpsk(cfg);
  const auto sps = static_cast<std::size_t>(cfg.samples_per_symbol);
  SampleBuffer out(bits.size() * sps);
  std::size_t n = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] >= cfg.psk_order)
      throw std::invalid_argument("symbol value " + std::to_string(bits[k]) +
                                  " at position " + std::to_string(k) +
                                  " is out of range for psk_order " +
                                  std::to_string(cfg.psk_order));
    const double phase = bits[k] ? kPi : 0.0;
    for (std::size_t s = 0; s < sps; ++s, ++n)
      out[n] = cfg.amplitude *
               std::cos(kTwoPi * cfg.carrier_freq * static_cast<double>(n) + phase);
  }
  return out;
}

BitStream demodulate(const SampleBuffer& samples, const ModemConfig& cfg) {
  require_bpsk(cfg);
  const auto sps = static_cast<std::size_t>(cfg.samples_per_symbol);
  const std::size_t n_symbols = samples.size() / sps;
  if (n_symbols * sps != samples.size())
    std::cerr << "alebench: warning: dropping trailing partial symbol ("
              << samples.size() - n_symbols * sps << " samples)\n";

  BitStream bits(n_symbols);
  for (std::size_t k = 0; k < n_symbols; ++k) {
    double corr = 0.0;
    for (std::size_t s = 0; s < sps; ++s) {
      const std::size_t n = k * sps + s;
      corr += samples[n] * std::cos(kTwoPi * cfg.carrier_freq * static_cast<double>(n));
    }
    bits[k] = corr < 0.0 ? 1 : 0;
  }
  return bits;
}

}  // namespace alebench
