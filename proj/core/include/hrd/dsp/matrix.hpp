#pragma once

#include <vector>

namespace hrd::dsp {

// Dense row-major real matrix used by the magnitude-domain operations.
struct RealMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<float> v;

  RealMatrix() = default;
  RealMatrix(int r, int c, float fill = 0.0f)
      : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

  float& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  float at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
};

}  // namespace hrd::dsp
