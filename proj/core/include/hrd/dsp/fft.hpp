#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hrd::dsp {

// Iterative radix-2 FFT with precomputed twiddles and bit-reversal table.
// Sizes must be powers of two. All arithmetic in double; results are
// bit-reproducible across runs of the same build.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::complex<double>* data) const { transform(data, false); }
  // Inverse transform including the 1/n scale.
  void inverse(std::complex<double>* data) const;

 private:
  void transform(std::complex<double>* data, bool inverse) const;

  std::size_t n_;
  std::vector<std::size_t> rev_;
  std::vector<std::complex<double>> twiddle_;  // exp(-2*pi*i*j/n), j < n/2
};

// Real-input FFT packed into a half-size complex transform.
class RealFft {
 public:
  explicit RealFft(std::size_t n);  // n: even power of two

  std::size_t size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  void forward(const double* x, std::complex<double>* out) const;  // out[bins()]
  void inverse(const std::complex<double>* bins, double* out) const;  // out[n]

 private:
  std::size_t n_;
  Fft half_;
  std::vector<std::complex<double>> shift_;  // exp(-2*pi*i*k/n), k <= n/2
};

bool is_power_of_two(std::size_t n);

}  // namespace hrd::dsp
