#pragma once

#include <filesystem>
#include <vector>

#include "hrd/dsp/audio.hpp"
#include "hrd/dsp/matrix.hpp"

namespace hrd::dsp {

// Floor added before the log so silent input maps to log(kMelLogFloor).
inline constexpr float kMelLogFloor = 1e-5f;

// Triangular mel filterbank on the HTK scale (2595*log10(1 + f/700)),
// spanning [0, sample_rate/2].
struct MelFilterbank {
  int mel_bins = 0;
  int fft_size = 0;
  int sample_rate = 0;
  std::vector<float> weights;    // mel_bins x (fft_size/2 + 1), row-major
  std::vector<float> center_hz;  // strictly increasing, one per filter

  int fft_bins() const { return fft_size / 2 + 1; }
  float weight(int d, int k) const {
    return weights[static_cast<std::size_t>(d) * fft_bins() + k];
  }

  static MelFilterbank create(int mel_bins, int fft_size, int sample_rate);
};

double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Log-scaled mel magnitudes, values = log(bank * |STFT| + kMelLogFloor).
// Row-major, one row per mel bin.
struct MelSpectrogram {
  std::vector<float> values;
  int mel_bins = 0;
  int frames = 0;
  int sample_rate = 0;
  int fft_size = 0;
  int hop_size = 0;

  float& at(int d, int n) { return values[static_cast<std::size_t>(d) * frames + n]; }
  float at(int d, int n) const { return values[static_cast<std::size_t>(d) * frames + n]; }
};

MelSpectrogram mel_spectrogram(const AudioClip& clip, const MelFilterbank& bank,
                               int fft_size, int hop_size);

// Mel matrix from precomputed linear magnitudes (rows = fft bins).
MelSpectrogram mel_from_magnitude(const RealMatrix& mag, const MelFilterbank& bank,
                                  int sample_rate, int fft_size, int hop_size);

// Inverts the log floor and maps mel magnitudes back to linear fft bins via
// the column-sum-normalized transpose of the filterbank.
RealMatrix mel_to_linear(const MelSpectrogram& mel, const MelFilterbank& bank);

// Phase reconstruction by alternating projection, zero initial phase.
AudioClip griffin_lim(const MelSpectrogram& mel, const MelFilterbank& bank, int iterations);

// Binary container: magic, then u32 {rows, cols, sample_rate, fft_size,
// hop_size} little-endian, then rows*cols float32 values row-major.
// Mel spectrograms use magic "MELS"; latent matrices reuse it with "LATN".
void save_mels(const MelSpectrogram& mel, const std::filesystem::path& path);
MelSpectrogram load_mels(const std::filesystem::path& path);

void save_matrix_container(const char magic[4], const RealMatrix& m, int sample_rate,
                           int fft_size, int hop_size, const std::filesystem::path& path);
RealMatrix load_matrix_container(const char magic[4], int* sample_rate, int* fft_size,
                                 int* hop_size, const std::filesystem::path& path);

}  // namespace hrd::dsp
