#pragma once

#include <array>
#include <limits>
#include <span>
#include <vector>

#include "alebench/rng.hpp"
#include "alebench/types.hpp"

namespace alebench {

/// One interference tone: amplitude * sin(2*pi*freq*n + phase).
struct Tone {
  double amplitude;
  double freq;  // cycles/sample
  double phase;
};

/// Channel corruption parameters. snr_db defaults to NaN ("unset") and must
/// be provided by the config or the sweep grid; +infinity disables AWGN.
struct NoiseSpec {
  double snr_db = std::numeric_limits<double>::quiet_NaN();
  bool nonlinear_enabled = false;
  double cubic_gain = 0.1;
  int tone_count = 2;
  std::array<double, 2> tone_amp_range{0.5, 1.0};
  std::array<double, 2> tone_freq_range{0.01, 0.1};
};

void validate(const NoiseSpec& spec);

/// Mean square value (1/H) * sum(x[n]^2); throws on an empty buffer.
double measure_power(const SampleBuffer& signal);

/// Gaussian noise variance that realizes snr_db against signal_power.
inline double awgn_variance(double signal_power, double snr_db) {
  return signal_power / std::pow(10.0, snr_db / 10.0);
}

/// Adds i.i.d. zero-mean Gaussian noise with variance referenced to the power
/// of `signal` itself. snr_db = +inf returns the input unchanged.
SampleBuffer add_awgn(const SampleBuffer& signal, double snr_db, Rng& rng);

/// Same, but the variance is referenced to an explicit power. Used when the
/// input already carries interference and the SNR must stay referenced to the
/// clean signal.
SampleBuffer add_awgn_ref(const SampleBuffer& signal, double reference_power,
                          double snr_db, Rng& rng);

/// Draws tone_count tones from the spec ranges; per tone the draw order is
/// amplitude, frequency, phase.
std::vector<Tone> draw_tones(const NoiseSpec& spec, Rng& rng);

/// out[n] = x[n] + cubic_gain * x[n]^3 + sum_k tone_k(n). Deterministic core
/// of the nonlinear corruption.
SampleBuffer apply_nonlinearity(const SampleBuffer& signal, double cubic_gain,
                                std::span<const Tone> tones);

/// Memoryless cubic distortion plus random low-frequency tones. AWGN is not
/// applied here; the caller adds it afterwards, referenced to the clean
/// signal power.
SampleBuffer add_nonlinear_noise(const SampleBuffer& signal, const NoiseSpec& spec,
                                 Rng& rng);

}  // namespace alebench
