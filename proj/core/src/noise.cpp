// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/noise.hpp"

#include <cmath>

#include "ledscope/rng.hpp"

namespace ledscope {

double noisy_value(double value, double k, std::uint64_t seed, std::uint64_t step,
                   std::uint64_t pixel_index) {
  if (k == 0.0) return value;
  double sigma = std::sqrt(k * std::abs(value));
  return value + sigma * key_normal(key_combine(seed, step, pixel_index));
}

Image apply_noise(const Image& image, const NoiseConfig& cfg, std::uint64_t step) {
  cfg.validate();
  if (!cfg.enabled || cfg.k == 0.0) return image;
  Image out(image.rows(), image.cols());
  for (std::size_t i = 0; i < image.size(); ++i)
    out[i] = noisy_value(image[i], cfg.k, cfg.seed, step, i);
  return out;
}

}  // namespace ledscope
