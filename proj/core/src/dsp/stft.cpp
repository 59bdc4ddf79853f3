#include "hrd/dsp/stft.hpp"

#include <cmath>
#include <numbers>

#include "hrd/dsp/fft.hpp"
#include "hrd/errors.hpp"

namespace hrd::dsp {

std::vector<double> hann_window(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  }
  return w;
}

ComplexSpectrogram stft(const AudioClip& clip, int fft_size, int hop_size) {
  if (fft_size <= 0 || !is_power_of_two(static_cast<std::size_t>(fft_size))) {
    throw ConfigError("stft fft_size must be a power of two");
  }
  if (hop_size <= 0 || hop_size > fft_size) {
    throw ConfigError("stft hop_size must be in [1, fft_size]");
  }
  const int len = static_cast<int>(clip.samples.size());
  if (len < fft_size) throw InputError("clip shorter than one stft frame");

  const int frames = (len - fft_size) / hop_size + 1;
  const std::vector<double> window = hann_window(fft_size);
  RealFft fft(static_cast<std::size_t>(fft_size));
  const int bins = fft_size / 2 + 1;

  ComplexSpectrogram spec;
  spec.fft_size = fft_size;
  spec.hop_size = hop_size;
  spec.frames = frames;
  spec.sample_rate = clip.sample_rate;
  spec.bins.resize(static_cast<std::size_t>(bins) * frames);

  std::vector<double> frame(fft_size);
  std::vector<std::complex<double>> out(bins);
  for (int t = 0; t < frames; ++t) {
    const float* src = clip.samples.data() + static_cast<std::size_t>(t) * hop_size;
    for (int i = 0; i < fft_size; ++i) frame[i] = window[i] * static_cast<double>(src[i]);
    fft.forward(frame.data(), out.data());
    for (int k = 0; k < bins; ++k) {
      spec.bins[static_cast<std::size_t>(k) * frames + t] =
          std::complex<float>(static_cast<float>(out[k].real()), static_cast<float>(out[k].imag()));
    }
  }
  return spec;
}

AudioClip istft(const ComplexSpectrogram& spec) {
  if (spec.frames <= 0) throw InputError("istft: spectrogram has no frames");
  if (spec.hop_size <= 0 || spec.hop_size > spec.fft_size) {
    throw ConfigError("istft: inconsistent hop/fft metadata");
  }
  const int fft_size = spec.fft_size;
  const int hop = spec.hop_size;
  const int frames = spec.frames;
  const int bins = fft_size / 2 + 1;
  if (static_cast<int>(spec.bins.size()) != bins * frames) {
    throw InputError("istft: bin matrix does not match metadata");
  }

  const std::vector<double> window = hann_window(fft_size);
  RealFft fft(static_cast<std::size_t>(fft_size));
  const int out_len = (frames - 1) * hop + fft_size;

  std::vector<double> acc(out_len, 0.0);
  std::vector<double> wsum(out_len, 0.0);
  std::vector<std::complex<double>> frame_bins(bins);
  std::vector<double> frame(fft_size);
  for (int t = 0; t < frames; ++t) {
    for (int k = 0; k < bins; ++k) {
      const std::complex<float> v = spec.bins[static_cast<std::size_t>(k) * frames + t];
      frame_bins[k] = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    fft.inverse(frame_bins.data(), frame.data());
    const int offset = t * hop;
    for (int i = 0; i < fft_size; ++i) {
      acc[offset + i] += frame[i];
      wsum[offset + i] += window[i];
    }
  }

  // Interior samples must be covered by overlapping windows; the first and
  // last fft_size samples are edge-tapered by construction.
  if (frames > 1) {
    for (int i = fft_size; i < out_len - fft_size; ++i) {
      if (wsum[i] < 1e-8) throw NumericalError("istft: zero window sum in interior region");
    }
  }

  AudioClip clip;
  clip.sample_rate = spec.sample_rate;
  clip.samples.resize(out_len);
  for (int i = 0; i < out_len; ++i) {
    const double denom = wsum[i] > 1.0 ? wsum[i] : 1.0;
    clip.samples[i] = static_cast<float>(acc[i] / denom);
  }
  return clip;
}

RealMatrix magnitude(const ComplexSpectrogram& spec) {
  RealMatrix m(spec.rows(), spec.frames);
  for (std::size_t i = 0; i < spec.bins.size(); ++i) m.v[i] = std::abs(spec.bins[i]);
  return m;
}

}  // namespace hrd::dsp
