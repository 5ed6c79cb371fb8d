// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ledscope/nn/tensor.hpp"
#include "ledscope/noise.hpp"

namespace ledscope::nn {

/// Named view of a parameter (or persistent state) vector and its gradient.
/// Non-trainable entries (batch-norm running statistics) are serialized but
/// skipped by the optimizer.
struct ParamRef {
  std::string name;
  std::vector<double>* value = nullptr;
  std::vector<double>* grad = nullptr;  // null for non-trainable state
  std::vector<int> shape;
  bool trainable = true;
};

/// A differentiable operation with cached forward context. forward/backward
/// calls must alternate on the same instance; parameter gradients accumulate
/// until zero_grad().
class Layer {
 public:
  virtual ~Layer() = default;
  virtual Tensor forward(const Tensor& x, bool training) = 0;
  virtual Tensor backward(const Tensor& grad_out) = 0;
  virtual void collect_params(const std::string& prefix, std::vector<ParamRef>& out) {}
  virtual void zero_grad() {}
};

/// 3x3 convolution, stride 1, 1-pixel zero padding (spatial size preserved).
/// Kaiming-uniform weight init keyed by `init_key`; zero bias.
class Conv2d final : public Layer {
 public:
  Conv2d(int in_channels, int out_channels, std::uint64_t init_key);

  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override;
  void collect_params(const std::string& prefix, std::vector<ParamRef>& out) override;
  void zero_grad() override;

  int in_channels() const { return in_ch_; }
  int out_channels() const { return out_ch_; }

 private:
  int in_ch_, out_ch_;
  std::vector<double> weight_, weight_grad_;  // (out_ch, in_ch, 3, 3)
  std::vector<double> bias_, bias_grad_;      // (out_ch)
  Tensor input_;                              // cached for backward
};

/// Per-channel batch normalization: batch statistics during training,
/// running averages at evaluation (momentum 0.1, eps 1e-5).
class BatchNorm2d final : public Layer {
 public:
  explicit BatchNorm2d(int channels);

  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override;
  void collect_params(const std::string& prefix, std::vector<ParamRef>& out) override;
  void zero_grad() override;

 private:
  int ch_;
  std::vector<double> gamma_, gamma_grad_, beta_, beta_grad_;
  std::vector<double> running_mean_, running_var_;
  // forward cache
  Tensor xhat_;
  std::vector<double> inv_std_;
  bool trained_forward_ = false;
};

class ReLU final : public Layer {
 public:
  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override;

 private:
  std::vector<bool> mask_;
  int n_ = 0, c_ = 0, h_ = 0, w_ = 0;
};

class Sigmoid final : public Layer {
 public:
  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override;

 private:
  Tensor output_;
};

/// 2x2 max pooling, stride 2. Ties resolve to the first element in scan
/// order, so gradients land deterministically.
class MaxPool2 final : public Layer {
 public:
  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override;

 private:
  std::vector<std::size_t> argmax_;
  int in_n_ = 0, in_c_ = 0, in_h_ = 0, in_w_ = 0;
};

/// Nearest-neighbor 2x upsampling.
class UpsampleNearest2 final : public Layer {
 public:
  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override;

 private:
  int in_n_ = 0, in_c_ = 0, in_h_ = 0, in_w_ = 0;
};

/// The physical layer: collapses an N-image LED datacube to the single
/// synthesized image I' = sum_n w_n I_n. The weights are the illumination
/// pattern under optimization.
class PhysicalLayer final : public Layer {
 public:
  explicit PhysicalLayer(std::vector<double> weights, bool trainable = true);

  Tensor forward(const Tensor& x, bool training) override;
  /// Accumulates d loss / d w; the datacube itself is input data, so no
  /// input gradient is produced (an empty tensor is returned).
  Tensor backward(const Tensor& grad_out) override;
  void collect_params(const std::string& prefix, std::vector<ParamRef>& out) override;
  void zero_grad() override;

  const std::vector<double>& weights() const { return weights_; }
  std::vector<double>& weights() { return weights_; }
  const std::vector<double>& weight_grad() const { return grad_; }

 private:
  std::vector<double> weights_, grad_;
  bool trainable_;
  Tensor input_;
};

/// Training-time intensity-proportional Gaussian noise (identity when
/// disabled or at evaluation). Draws are keyed by (seed, step, element), and
/// the step counter advances on every training forward, giving fresh draws
/// per invocation. The realized sample is treated as an additive constant in
/// backward, so gradients flow through the mean only.
class NoiseLayer final : public Layer {
 public:
  explicit NoiseLayer(const NoiseConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

  Tensor forward(const Tensor& x, bool training) override;
  Tensor backward(const Tensor& grad_out) override { return grad_out; }

 private:
  NoiseConfig cfg_;
  std::uint64_t step_ = 0;
};

/// Concatenate two tensors along channels.
Tensor concat_channels(const Tensor& a, const Tensor& b);
/// Split a channel-concatenated gradient back into the two parts.
void split_channels(const Tensor& grad, int c_first, Tensor& grad_a, Tensor& grad_b);

}  // namespace ledscope::nn
