#include "alebench/channel.hpp"

#include <cmath>

namespace alebench {

void validate(const NoiseSpec& spec) {
  // snr_db = NaN means "not resolved yet" and is acceptable here; it is
  // rejected at the point of use (add_awgn, experiment resolution).
  if (std::isinf(spec.snr_db) && spec.snr_db < 0.0)
    throw ConfigError("noise.snr_db must be finite or +inf");
  if (!std::isfinite(spec.cubic_gain))
    throw ConfigError("noise.cubic_gain must be finite");
  if (spec.tone_count < 0) throw ConfigError("noise.tone_count must be >= 0");
  if (!(spec.tone_amp_range[0] >= 0.0) ||
      !(spec.tone_amp_range[0] <= spec.tone_amp_range[1]))
    throw ConfigError("noise.tone_amp_range must be ordered and non-negative");
  if (!(spec.tone_freq_range[0] > 0.0) || !(spec.tone_freq_range[1] < 0.5) ||
      !(spec.tone_freq_range[0] <= spec.tone_freq_range[1]))
    throw ConfigError("noise.tone_freq_range must lie within (0, 0.5) and be ordered");
}

double measure_power(const SampleBuffer& signal) {
  if (signal.empty()) throw std::invalid_argument("measure_power: empty buffer");
  double acc = 0.0;
  for (const double x : signal) acc += x * x;
  return acc / static_cast<double>(signal.size());
}

SampleBuffer add_awgn(const SampleBuffer& signal, double snr_db, Rng& rng) {
  return add_awgn_ref(signal, measure_power(signal), snr_db, rng);
}

SampleBuffer add_awgn_ref(const SampleBuffer& signal, double reference_power,
                          double snr_db, Rng& rng) {
  if (signal.empty()) throw std::invalid_argument("add_awgn: empty buffer");
  if (std::isnan(snr_db) || (std::isinf(snr_db) && snr_db < 0.0))
    throw std::invalid_argument("add_awgn: snr_db must be finite or +inf");
  if (std::isinf(snr_db)) return signal;  // noise disabled
  if (!(reference_power > 0.0))
    throw std::invalid_argument("add_awgn: zero-power signal");

  const double sigma = std::sqrt(awgn_variance(reference_power, snr_db));
  SampleBuffer out(signal.size());
  for (std::size_t n = 0; n < signal.size(); ++n)
    out[n] = signal[n] + sigma * rng.gaussian();
  return out;
}

std::vector<Tone> draw_tones(const NoiseSpec& spec, Rng& rng) {
  validate(spec);
  std::vector<Tone> tones(static_cast<std::size_t>(spec.tone_count));
  for (auto& tone : tones) {
    tone.amplitude = rng.uniform(spec.tone_amp_range[0], spec.tone_amp_range[1]);
    tone.freq = rng.uniform(spec.tone_freq_range[0], spec.tone_freq_range[1]);
    tone.phase = rng.uniform(0.0, kTwoPi);
  }
  return tones;
}

SampleBuffer apply_nonlinearity(const SampleBuffer& signal, double cubic_gain,
                                std::span<const Tone> tones) {
  SampleBuffer out(signal.size());
  for (std::size_t n = 0; n < signal.size(); ++n) {
    const double x = signal[n];
    double y = x + cubic_gain * x * x * x;
    for (const Tone& tone : tones)
      y += tone.amplitude *
           std::sin(kTwoPi * tone.freq * static_cast<double>(n) + tone.phase);
    out[n] = y;
  }
  return out;
}

SampleBuffer add_nonlinear_noise(const SampleBuffer& signal, const NoiseSpec& spec,
                                 Rng& rng) {
  const std::vector<Tone> tones = draw_tones(spec, rng);
  return apply_nonlinearity(signal, spec.cubic_gain, tones);
}

}  // namespace alebench
