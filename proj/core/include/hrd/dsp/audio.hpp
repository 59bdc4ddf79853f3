#pragma once

#include <filesystem>
#include <vector>

namespace hrd::dsp {

// Mono audio buffer. Samples live in [-1, 1]; stereo sources are downmixed
// by averaging on load.
struct AudioClip {
  std::vector<float> samples;
  int sample_rate = 22050;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// Throws InputError if the clip violates its invariants (finite samples,
// positive sample rate).
void validate(const AudioClip& clip);

// 16-bit PCM RIFF WAVE. Multi-channel inputs are averaged down to mono.
AudioClip load_wav(const std::filesystem::path& path);
void save_wav(const AudioClip& clip, const std::filesystem::path& path);

}  // namespace hrd::dsp
