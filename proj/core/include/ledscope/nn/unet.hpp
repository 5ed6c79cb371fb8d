// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ledscope/nn/layers.hpp"

namespace ledscope::nn {

/// Architecture knobs. Fixed by construction: 3x3 kernels with 1-pixel zero
/// padding, ReLU activations, batch normalization after every convolution,
/// 2x2 max-pool downsampling, nearest-neighbor upsampling followed by a 3x3
/// convolution, channel-concatenating skip connections, sigmoid head.
struct UNetConfig {
  int initial_filters = 16;
  double expansion_ratio = 2.0;
  int convs_per_block = 2;
  int down_blocks = 5;
  int up_blocks = 5;

  void validate() const;
  int filters_at(int stage) const;
};

/// Encoder/decoder image-to-image network. Input must have spatial sides
/// divisible by 2^down_blocks; output is single-channel in (0, 1).
class UNet {
 public:
  UNet(const UNetConfig& cfg, int in_channels, std::uint64_t init_seed);

  Tensor forward(const Tensor& x, bool training);
  /// Returns the gradient with respect to the network input.
  Tensor backward(const Tensor& grad_out);

  void collect_params(std::vector<ParamRef>& out);
  void zero_grad();

  const UNetConfig& config() const { return cfg_; }
  int in_channels() const { return in_channels_; }

 private:
  struct Stage {
    std::vector<std::unique_ptr<Layer>> ops;
    Tensor forward(const Tensor& x, bool training);
    Tensor backward(const Tensor& grad);
  };

  UNetConfig cfg_;
  int in_channels_;
  std::vector<Stage> encoder_;
  std::vector<MaxPool2> pools_;
  std::vector<UpsampleNearest2> upsamplers_;
  std::vector<Stage> up_convs_;
  std::vector<Stage> decoder_;
  Stage head_;

  // forward cache
  std::vector<Tensor> skips_;
  std::vector<Tensor> skip_grads_;
};

}  // namespace ledscope::nn
