#pragma once

#include "alebench/rng.hpp"
#include "alebench/types.hpp"

namespace alebench {

/// Passband M-PSK waveform parameters. Frequencies are normalized to
/// cycles/sample; nominal_rf_hz is carried as metadata and never enters the
/// math.
struct ModemConfig {
  int psk_order = 2;
  int samples_per_symbol = 10;
  double carrier_freq = 0.25;
  double amplitude = 1.0;
  double nominal_rf_hz = 2.4e9;
};

/// Throws ConfigError if any field is out of range.
void validate(const ModemConfig& cfg);

/// n_bits independent equiprobable bits; a given rng state yields the same
/// stream every time.
BitStream generate_bits(std::size_t n_bits, Rng& rng);

/// Maps bit b of symbol k to samples A*cos(2*pi*f_c*n + b*pi) where n is the
/// global sample index (phase-continuous across symbols). Only BPSK
/// (psk_order = 2) is implemented; higher orders are rejected.
SampleBuffer modulate(const BitStream& bits, const ModemConfig& cfg);

/// Coherent correlation receiver: per symbol, correlate against
/// cos(2*pi*f_c*n) and decide bit 1 on negative correlation; exact ties
/// resolve to bit 0. A trailing partial symbol is dropped with a warning on
/// stderr.
BitStream demodulate(const SampleBuffer& samples, const ModemConfig& cfg);

}  // namespace alebench
