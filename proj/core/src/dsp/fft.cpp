#include "hrd/dsp/fft.hpp"

#include <cmath>
#include <numbers>

#include "hrd/errors.hpp"

namespace hrd::dsp {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) throw ConfigError("fft size must be a power of two");
  rev_.resize(n);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) {
      r = (r << 1) | ((i >> b) & 1u);
    }
    rev_[i] = r;
  }
  twiddle_.resize(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double a = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle_[j] = {std::cos(a), std::sin(a)};
  }
}

void Fft::transform(std::complex<double>* data, bool inverse) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rev_[i] > i) std::swap(data[i], data[rev_[i]]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        std::complex<double> w = twiddle_[j * stride];
        if (inverse) w = std::conj(w);
        const std::complex<double> u = data[start + j];
        const std::complex<double> v = data[start + j + half] * w;
        data[start + j] = u + v;
        data[start + j + half] = u - v;
      }
    }
  }
}

void Fft::inverse(std::complex<double>* data) const {
  transform(data, true);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= scale;
}

RealFft::RealFft(std::size_t n) : n_(n), half_(n / 2) {
  if (!is_power_of_two(n) || n < 4) throw ConfigError("real fft size must be a power of two >= 4");
  shift_.resize(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    const double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    shift_[k] = {std::cos(a), std::sin(a)};
  }
}

void RealFft::forward(const double* x, std::complex<double>* out) const {
  const std::size_t m = n_ / 2;
  std::vector<std::complex<double>> z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = {x[2 * k], x[2 * k + 1]};
  half_.forward(z.data());
  for (std::size_t k = 0; k <= m; ++k) {
    const std::complex<double> zk = z[k % m];
    const std::complex<double> zmk = std::conj(z[(m - k) % m]);
    const std::complex<double> even = 0.5 * (zk + zmk);
    const std::complex<double> odd = std::complex<double>(0.0, -0.5) * (zk - zmk);
    out[k] = even + shift_[k] * odd;
  }
}

void RealFft::inverse(const std::complex<double>* bins, double* out) const {
  const std::size_t m = n_ / 2;
  std::vector<std::complex<double>> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::complex<double> xk = bins[k];
    const std::complex<double> xmk = std::conj(bins[m - k]);
    const std::complex<double> even = 0.5 * (xk + xmk);
    const std::complex<double> odd = 0.5 * std::conj(shift_[k]) * (xk - xmk);
    z[k] = even + std::complex<double>(0.0, 1.0) * odd;
  }
  half_.inverse(z.data());
  for (std::size_t k = 0; k < m; ++k) {
    out[2 * k] = z[k].real();
    out[2 * k + 1] = z[k].imag();
  }
}

}  // namespace hrd::dsp
