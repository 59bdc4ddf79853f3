#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace hrd {

// Counter-based splittable generator. Every draw is a pure function of
// (key, counter), and split() derives an independent key, so augmentation
// workers, reparameterization noise and weight init stay reproducible no
// matter how work is scheduled across threads or steps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  Rng split(std::uint64_t stream) const {
    return Rng(mix(key_ ^ mix(stream ^ 0xbf58476d1ce4e5b9ull)), 0);
  }
  Rng split(std::string_view name) const { return split(fnv1a(name)); }

  std::uint64_t next_u64() { return mix(key_ ^ mix(counter_++ ^ 0x94d049bb133111ebull)); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive, rejection-sampled.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = range * (~0ull / range);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return lo + static_cast<int>(v % range);
  }

  // Box-Muller; spends two draws per sample so the stream position stays
  // a pure function of the sample count.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  template <typename T>
  std::vector<T> normal_vector(std::size_t n) {
    std::vector<T> out(n);
    for (auto& x : out) x = static_cast<T>(normal());
    return out;
  }

  template <typename T>
  std::vector<T> uniform_vector(std::size_t n, double lo, double hi) {
    std::vector<T> out(n);
    for (auto& x : out) x = static_cast<T>(uniform(lo, hi));
    return out;
  }

 private:
  Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace hrd
