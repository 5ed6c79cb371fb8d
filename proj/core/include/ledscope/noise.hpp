// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "ledscope/image.hpp"

namespace ledscope {

/// Training-time noise injection: per pixel, I'' ~ Normal(I', k * |I'|).
/// Variance proportional to intensity mimics shot noise that the averaged
/// simulation otherwise lacks. Draws are keyed by (seed, step, pixel index),
/// so parallel evaluation stays reproducible.
struct NoiseConfig {
  double k = 0.0;
  bool enabled = false;
  std::uint64_t seed = 0;

  void validate() const {
    if (k < 0.0) throw ConfigError("NoiseConfig: k must be >= 0");
  }
};

/// Fresh draws on every invocation via the `step` counter.
Image apply_noise(const Image& image, const NoiseConfig& cfg, std::uint64_t step);

/// Single-pixel draw, the primitive behind apply_noise.
double noisy_value(double value, double k, std::uint64_t seed, std::uint64_t step,
                   std::uint64_t pixel_index);

}  // namespace ledscope
