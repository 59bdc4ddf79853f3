#pragma once

#include "hrd/dsp/audio.hpp"

namespace hrd::dsp {

struct PitchShiftConfig {
  int fft_size = 2048;
  int hop_size = 512;
};

// Shifts pitch by 2^(semitones/12) while preserving length: phase-vocoder
// time stretch (identity phase locking at magnitude peaks) followed by
// resampling back to the original duration. semitones = 0 bypasses.
// |semitones| must be <= 12.
AudioClip pitch_shift(const AudioClip& clip, double semitones,
                      const PitchShiftConfig& config = {});

}  // namespace hrd::dsp
