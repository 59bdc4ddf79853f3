#pragma once

#include <complex>
#include <vector>

#include "hrd/dsp/audio.hpp"
#include "hrd/dsp/matrix.hpp"

namespace hrd::dsp {

// Short-time Fourier transform of a mono clip. Frame t covers samples
// [t*hop, t*hop + fft_size), Hann-windowed; bins are stored row-major with
// one row per frequency bin (fft_size/2 + 1 rows).
struct ComplexSpectrogram {
  std::vector<std::complex<float>> bins;
  int fft_size = 0;
  int hop_size = 0;
  int frames = 0;
  int sample_rate = 0;

  int rows() const { return fft_size / 2 + 1; }
  std::complex<float>& at(int bin, int frame) {
    return bins[static_cast<std::size_t>(bin) * frames + frame];
  }
  std::complex<float> at(int bin, int frame) const {
    return bins[static_cast<std::size_t>(bin) * frames + frame];
  }
};

// Periodic Hann window of length n.
std::vector<double> hann_window(int n);

// Throws InputError when the clip is shorter than one frame and ConfigError
// for invalid analysis parameters (hop > fft, non-power-of-two fft).
ComplexSpectrogram stft(const AudioClip& clip, int fft_size, int hop_size);

// Overlap-add synthesis normalized by the per-sample window sum. The
// denominator is floored at 1 so sparse coverage (frame edges, isolated
// frames) passes through unscaled. Throws NumericalError when interior
// samples have zero window sum.
AudioClip istft(const ComplexSpectrogram& spec);

// Magnitudes |STFT|, same row-major layout as the spectrogram.
RealMatrix magnitude(const ComplexSpectrogram& spec);

}  // namespace hrd::dsp
