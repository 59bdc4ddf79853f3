#include "hrd/dsp/pitch_shift.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hrd/dsp/stft.hpp"
#include "hrd/errors.hpp"

namespace hrd::dsp {

namespace {

double princarg(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return phase - two_pi * std::floor((phase + std::numbers::pi) / two_pi);
}

float cubic_interp(const std::vector<float>& y, double pos) {
  const int n = static_cast<int>(y.size());
  const int i = static_cast<int>(std::floor(pos));
  const double t = pos - i;
  auto sample = [&](int idx) -> double {
    if (idx < 0) idx = 0;
    if (idx >= n) idx = n - 1;
    return y[idx];
  };
  const double ym1 = sample(i - 1), y0 = sample(i), y1 = sample(i + 1), y2 = sample(i + 2);
  // Catmull-Rom
  const double a = y0;
  const double b = 0.5 * (y1 - ym1);
  const double c = ym1 - 2.5 * y0 + 2.0 * y1 - 0.5 * y2;
  const double d = 0.5 * (y2 - ym1) + 1.5 * (y0 - y1);
  return static_cast<float>(a + t * (b + t * (c + t * d)));
}

// Time-stretches to duration*ratio at constant pitch.
AudioClip stretch(const AudioClip& clip, double ratio, const PitchShiftConfig& cfg) {
  const int fft = cfg.fft_size;
  const int hop = cfg.hop_size;
  const int len = static_cast<int>(clip.samples.size());

  // Tail padding keeps fractional analysis positions within range.
  AudioClip padded = clip;
  padded.samples.resize(static_cast<std::size_t>(len) + 2 * fft, 0.0f);
  const ComplexSpectrogram spec = stft(padded, fft, hop);
  const int in_frames = spec.frames;
  const int bins = spec.rows();

  const int target_len = static_cast<int>(std::lround(len * ratio));
  int out_frames = (target_len >= fft ? (target_len - fft) / hop + 1 : 1) + 2;
  const double max_pos = static_cast<double>(in_frames - 2);

  std::vector<float> mag_a(bins), mag_b(bins), mag(bins);
  std::vector<double> phase_a(bins), phase_b(bins), acc(bins);
  std::vector<int> peak_of(bins);

  ComplexSpectrogram out;
  out.fft_size = fft;
  out.hop_size = hop;
  out.frames = out_frames;
  out.sample_rate = clip.sample_rate;
  out.bins.resize(static_cast<std::size_t>(bins) * out_frames);

  for (int j = 0; j < out_frames; ++j) {
    double pos = static_cast<double>(j) / ratio;
    if (pos > max_pos) pos = max_pos;
    const int i = static_cast<int>(std::floor(pos));
    const double frac = pos - i;
    for (int k = 0; k < bins; ++k) {
      const std::complex<float> va = spec.at(k, i);
      const std::complex<float> vb = spec.at(k, i + 1);
      mag_a[k] = std::abs(va);
      mag_b[k] = std::abs(vb);
      phase_a[k] = std::arg(va);
      phase_b[k] = std::arg(vb);
      mag[k] = static_cast<float>((1.0 - frac) * mag_a[k] + frac * mag_b[k]);
    }

    if (j == 0) {
      for (int k = 0; k < bins; ++k) acc[k] = phase_a[k];
    } else {
      for (int k = 0; k < bins; ++k) {
        const double expected = 2.0 * std::numbers::pi * k * hop / fft;
        const double dev = princarg(phase_b[k] - phase_a[k] - expected);
        acc[k] += expected + dev;
      }
    }

    // Identity phase locking: bins follow the nearest magnitude peak,
    // reproducing the analysis frame's phase relationship around it.
    int last_peak = -1;
    for (int k = 0; k < bins; ++k) {
      const bool up2 = k < 2 || mag[k] >= mag[k - 2];
      const bool up1 = k < 1 || mag[k] > mag[k - 1];
      const bool dn1 = k > bins - 2 || mag[k] > mag[k + 1];
      const bool dn2 = k > bins - 3 || mag[k] >= mag[k + 2];
      if (up1 && up2 && dn1 && dn2 && mag[k] > 0.0f) {
        if (last_peak >= 0) {
          const int split = (last_peak + k) / 2;
          for (int b = last_peak + 1; b <= split; ++b) peak_of[b] = last_peak;
          for (int b = split + 1; b < k; ++b) peak_of[b] = k;
        } else {
          for (int b = 0; b < k; ++b) peak_of[b] = k;
        }
        peak_of[k] = k;
        last_peak = k;
      }
    }
    if (last_peak < 0) {
      for (int k = 0; k < bins; ++k) peak_of[k] = k;  // no peaks: free propagation
    } else {
      for (int b = last_peak + 1; b < bins; ++b) peak_of[b] = last_peak;
    }
    for (int k = 0; k < bins; ++k) {
      const int p = peak_of[k];
      if (p != k) acc[k] = acc[p] + (phase_a[k] - phase_a[p]);
    }

    for (int k = 0; k < bins; ++k) {
      out.bins[static_cast<std::size_t>(k) * out_frames + j] =
          std::polar(mag[k], static_cast<float>(acc[k]));
    }
  }

  AudioClip stretched = istft(out);
  stretched.samples.resize(static_cast<std::size_t>(std::max(target_len, 1)), 0.0f);
  return stretched;
}

}  // namespace

AudioClip pitch_shift(const AudioClip& clip, double semitones, const PitchShiftConfig& config) {
  if (std::abs(semitones) > 12.0) {
    throw RangeError("pitch_shift: |semitones| must be <= 12");
  }
  if (semitones == 0.0) return clip;

  const double ratio = std::pow(2.0, semitones / 12.0);
  const AudioClip stretched = stretch(clip, ratio, config);

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(clip.samples.size());
  for (std::size_t n = 0; n < out.samples.size(); ++n) {
    out.samples[n] = cubic_interp(stretched.samples, static_cast<double>(n) * ratio);
  }
  return out;
}

}  // namespace hrd::dsp
