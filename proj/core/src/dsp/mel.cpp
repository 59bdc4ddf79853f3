#include "hrd/dsp/mel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "hrd/dsp/stft.hpp"
#include "hrd/errors.hpp"

namespace hrd::dsp {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

MelFilterbank MelFilterbank::create(int mel_bins, int fft_size, int sample_rate) {
  if (mel_bins <= 0 || fft_size <= 0 || sample_rate <= 0) {
    throw ConfigError("mel filterbank: all sizes must be positive");
  }
  MelFilterbank bank;
  bank.mel_bins = mel_bins;
  bank.fft_size = fft_size;
  bank.sample_rate = sample_rate;

  const double f_max = sample_rate / 2.0;
  const double mel_max = hz_to_mel(f_max);
  std::vector<double> edges(mel_bins + 2);
  for (int i = 0; i < mel_bins + 2; ++i) {
    edges[i] = mel_to_hz(mel_max * i / (mel_bins + 1));
  }

  const int bins = fft_size / 2 + 1;
  bank.weights.assign(static_cast<std::size_t>(mel_bins) * bins, 0.0f);
  bank.center_hz.resize(mel_bins);
  for (int d = 0; d < mel_bins; ++d) {
    const double lo = edges[d];
    const double mid = edges[d + 1];
    const double hi = edges[d + 2];
    bank.center_hz[d] = static_cast<float>(mid);
    for (int k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / fft_size;
      double w = 0.0;
      if (f > lo && f < hi) {
        w = f <= mid ? (f - lo) / (mid - lo) : (hi - f) / (hi - mid);
      }
      bank.weights[static_cast<std::size_t>(d) * bins + k] = static_cast<float>(w);
    }
  }
  return bank;
}

MelSpectrogram mel_from_magnitude(const RealMatrix& mag, const MelFilterbank& bank,
                                  int sample_rate, int fft_size, int hop_size) {
  if (mag.rows != bank.fft_bins()) {
    throw ConfigError("mel: magnitude rows do not match filterbank fft bins");
  }
  MelSpectrogram mel;
  mel.mel_bins = bank.mel_bins;
  mel.frames = mag.cols;
  mel.sample_rate = sample_rate;
  mel.fft_size = fft_size;
  mel.hop_size = hop_size;
  mel.values.resize(static_cast<std::size_t>(bank.mel_bins) * mag.cols);

  const int bins = bank.fft_bins();
  for (int d = 0; d < bank.mel_bins; ++d) {
    const float* w = bank.weights.data() + static_cast<std::size_t>(d) * bins;
    // Triangles have contiguous support; skip the zero span.
    int k_begin = 0;
    while (k_begin < bins && w[k_begin] == 0.0f) ++k_begin;
    int k_end = bins;
    while (k_end > k_begin && w[k_end - 1] == 0.0f) --k_end;
    for (int n = 0; n < mag.cols; ++n) {
      double acc = 0.0;
      for (int k = k_begin; k < k_end; ++k) {
        acc += static_cast<double>(w[k]) * mag.at(k, n);
      }
      mel.at(d, n) = static_cast<float>(std::log(acc + static_cast<double>(kMelLogFloor)));
    }
  }
  return mel;
}

MelSpectrogram mel_spectrogram(const AudioClip& clip, const MelFilterbank& bank,
                               int fft_size, int hop_size) {
  if (fft_size != bank.fft_size) throw ConfigError("mel: fft_size does not match filterbank");
  if (clip.sample_rate != bank.sample_rate) {
    throw ConfigError("mel: clip sample rate does not match filterbank");
  }
  const ComplexSpectrogram spec = stft(clip, fft_size, hop_size);
  return mel_from_magnitude(magnitude(spec), bank, clip.sample_rate, fft_size, hop_size);
}

RealMatrix mel_to_linear(const MelSpectrogram& mel, const MelFilterbank& bank) {
  if (mel.mel_bins != bank.mel_bins) throw ConfigError("mel_to_linear: bin count mismatch");
  const int bins = bank.fft_bins();
  RealMatrix lin(bins, mel.frames);

  std::vector<double> colsum(bins, 0.0);
  for (int d = 0; d < bank.mel_bins; ++d) {
    for (int k = 0; k < bins; ++k) colsum[k] += bank.weight(d, k);
  }
  std::vector<double> mel_mag(static_cast<std::size_t>(mel.mel_bins) * mel.frames);
  for (std::size_t i = 0; i < mel.values.size(); ++i) {
    mel_mag[i] = std::max(0.0, std::exp(static_cast<double>(mel.values[i])) -
                                   static_cast<double>(kMelLogFloor));
  }
  for (int k = 0; k < bins; ++k) {
    if (colsum[k] < 1e-12) continue;  // outside filter coverage
    for (int n = 0; n < mel.frames; ++n) {
      double acc = 0.0;
      for (int d = 0; d < bank.mel_bins; ++d) {
        const float w = bank.weight(d, k);
        if (w != 0.0f) acc += w * mel_mag[static_cast<std::size_t>(d) * mel.frames + n];
      }
      lin.at(k, n) = static_cast<float>(acc / colsum[k]);
    }
  }
  return lin;
}

AudioClip griffin_lim(const MelSpectrogram& mel, const MelFilterbank& bank, int iterations) {
  if (iterations < 1) throw ConfigError("griffin_lim: iterations must be >= 1");
  const RealMatrix target = mel_to_linear(mel, bank);
  const int bins = target.rows;
  const int frames = target.cols;

  ComplexSpectrogram spec;
  spec.fft_size = mel.fft_size;
  spec.hop_size = mel.hop_size;
  spec.frames = frames;
  spec.sample_rate = mel.sample_rate;
  spec.bins.resize(static_cast<std::size_t>(bins) * frames);

  std::vector<float> phase(static_cast<std::size_t>(bins) * frames, 0.0f);
  AudioClip estimate;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < spec.bins.size(); ++i) {
      spec.bins[i] = std::polar(target.v[i], phase[i]);
    }
    estimate = istft(spec);
    const ComplexSpectrogram reproj = stft(estimate, mel.fft_size, mel.hop_size);
    for (std::size_t i = 0; i < spec.bins.size(); ++i) {
      phase[i] = std::arg(reproj.bins[i]);
    }
  }
  for (std::size_t i = 0; i < spec.bins.size(); ++i) {
    spec.bins[i] = std::polar(target.v[i], phase[i]);
  }
  return istft(spec);
}

namespace {

void put_u32(std::ofstream& f, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  f.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::ifstream& f) {
  unsigned char b[4];
  f.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void save_matrix_container(const char magic[4], const RealMatrix& m, int sample_rate,
                           int fft_size, int hop_size, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write file: " + path.string());
  f.write(magic, 4);
  put_u32(f, static_cast<std::uint32_t>(m.rows));
  put_u32(f, static_cast<std::uint32_t>(m.cols));
  put_u32(f, static_cast<std::uint32_t>(sample_rate));
  put_u32(f, static_cast<std::uint32_t>(fft_size));
  put_u32(f, static_cast<std::uint32_t>(hop_size));
  static_assert(sizeof(float) == 4);
  f.write(reinterpret_cast<const char*>(m.v.data()),
          static_cast<std::streamsize>(m.v.size() * sizeof(float)));
}

RealMatrix load_matrix_container(const char magic[4], int* sample_rate, int* fft_size,
                                 int* hop_size, const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open file: " + path.string());
  char got[4];
  f.read(got, 4);
  if (!f || std::memcmp(got, magic, 4) != 0) {
    throw InputError("bad magic in file: " + path.string());
  }
  RealMatrix m;
  m.rows = static_cast<int>(get_u32(f));
  m.cols = static_cast<int>(get_u32(f));
  const int sr = static_cast<int>(get_u32(f));
  const int fft = static_cast<int>(get_u32(f));
  const int hop = static_cast<int>(get_u32(f));
  if (sample_rate) *sample_rate = sr;
  if (fft_size) *fft_size = fft;
  if (hop_size) *hop_size = hop;
  if (m.rows <= 0 || m.cols <= 0) throw InputError("bad matrix header in: " + path.string());
  m.v.resize(static_cast<std::size_t>(m.rows) * m.cols);
  f.read(reinterpret_cast<char*>(m.v.data()),
         static_cast<std::streamsize>(m.v.size() * sizeof(float)));
  if (!f) throw InputError("truncated matrix file: " + path.string());
  return m;
}

void save_mels(const MelSpectrogram& mel, const std::filesystem::path& path) {
  RealMatrix m;
  m.rows = mel.mel_bins;
  m.cols = mel.frames;
  m.v = mel.values;
  save_matrix_container("MELS", m, mel.sample_rate, mel.fft_size, mel.hop_size, path);
}

MelSpectrogram load_mels(const std::filesystem::path& path) {
  MelSpectrogram mel;
  RealMatrix m = load_matrix_container("MELS", &mel.sample_rate, &mel.fft_size, &mel.hop_size, path);
  mel.mel_bins = m.rows;
  mel.frames = m.cols;
  mel.values = std::move(m.v);
  return mel;
}

}  // namespace hrd::dsp
