// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/led_array.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ledscope {

LedSpec led_spec(const LedArray& array, int index) {
  if (index < 0 || index >= array.led_count())
    throw std::out_of_range("led_spec: index " + std::to_string(index) + " not in [0, " +
                            std::to_string(array.led_count()) + ")");
  auto pos = array.grid_pos(index);
  auto [x, y] = array.offset_of(pos.row, pos.col);
  double lateral = std::hypot(x, y);
  double wavelength = array.wavelengths[pos.channel];

  LedSpec spec;
  spec.index = index;
  spec.wavelength = wavelength;
  spec.angle = std::atan2(lateral, array.distance);
  if (lateral > 0.0) {
    double sin_theta = lateral / std::hypot(lateral, array.distance);
    double k = 2.0 * std::numbers::pi / wavelength * sin_theta;
    spec.transverse_wavevector = {k * x / lateral, k * y / lateral};
  }
  return spec;
}

}  // namespace ledscope
