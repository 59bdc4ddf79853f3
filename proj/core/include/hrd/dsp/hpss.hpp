#pragma once

#include "hrd/dsp/matrix.hpp"

namespace hrd::dsp {

struct HpssConfig {
  int kernel = 31;     // median filter length on both axes
  double power = 2.0;  // soft mask exponent
};

struct HpssResult {
  RealMatrix harmonic;
  RealMatrix percussive;
};

// Harmonic-percussive separation by median filtering: the time-axis median
// keeps sustained structure, the frequency-axis median keeps broadband
// transients. Soft masks of the given power sum to one, so
// harmonic + percussive == input element-wise. Input must be a non-negative
// magnitude matrix (rows = frequency, cols = time).
HpssResult hpss(const RealMatrix& magnitude, const HpssConfig& config = {});

}  // namespace hrd::dsp
