// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "ledscope/errors.hpp"

namespace ledscope {

/// Programmable LED grid behind the sample. Each grid position carries one
/// emitter per color channel; LEDs are indexed (row, col, channel)-major, so
/// index = (row * cols + col) * channels + channel.
struct LedArray {
  int rows = 0;
  int cols = 0;
  std::vector<double> wavelengths;  // channel center wavelengths [m]
  double pitch = 0.0;               // LED spacing [m]
  double distance = 0.0;            // array-to-sample distance [m]
  int center_row = 0;               // on-axis LED grid position
  int center_col = 0;

  int channels() const { return static_cast<int>(wavelengths.size()); }
  int led_count() const { return rows * cols * channels(); }

  struct GridPos {
    int row;
    int col;
    int channel;
  };

  GridPos grid_pos(int index) const {
    int ch = index % channels();
    int cell = index / channels();
    return GridPos{cell / cols, cell % cols, ch};
  }

  int index_of(int row, int col, int channel) const {
    return (row * cols + col) * channels() + channel;
  }

  /// Lateral (x, y) position of a grid cell relative to the optical axis [m].
  std::array<double, 2> offset_of(int row, int col) const {
    return {(col - center_col) * pitch, (row - center_row) * pitch};
  }

  void validate() const {
    if (rows < 1 || cols < 1 || channels() < 1)
      throw ConfigError("LedArray: rows, cols and channels must each be >= 1");
    if (pitch <= 0.0) throw ConfigError("LedArray: pitch must be > 0");
    if (distance <= 0.0) throw ConfigError("LedArray: distance must be > 0");
    for (double wl : wavelengths)
      if (wl <= 0.0) throw ConfigError("LedArray: wavelengths must be > 0");
    if (center_row < 0 || center_row >= rows || center_col < 0 || center_col >= cols)
      throw ConfigError("LedArray: center index out of grid");
  }
};

/// Illumination geometry of one LED: plane-wave transverse wavevector
/// (radians/meter), wavelength and angle from the optical axis.
struct LedSpec {
  int index = 0;
  std::array<double, 2> transverse_wavevector = {0.0, 0.0};  // (kx, ky)
  double wavelength = 0.0;
  double angle = 0.0;
};

/// Plane-wave parameters for LED `index`; the center LED maps to a zero
/// transverse wavevector.
LedSpec led_spec(const LedArray& array, int index);

}  // namespace ledscope
