// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/nn/unet.hpp"

#include <cmath>
#include <string>

#include "ledscope/rng.hpp"

namespace ledscope::nn {

void UNetConfig::validate() const {
  if (initial_filters < 1) throw ConfigError("UNetConfig: initial_filters must be >= 1");
  if (expansion_ratio < 1.0) throw ConfigError("UNetConfig: expansion_ratio must be >= 1");
  if (convs_per_block < 1) throw ConfigError("UNetConfig: convs_per_block must be >= 1");
  if (down_blocks < 1) throw ConfigError("UNetConfig: down_blocks must be >= 1");
  if (down_blocks != up_blocks)
    throw ConfigError("UNetConfig: down_blocks and up_blocks must match");
}

int UNetConfig::filters_at(int stage) const {
  return static_cast<int>(std::lround(initial_filters * std::pow(expansion_ratio, stage)));
}

Tensor UNet::Stage::forward(const Tensor& x, bool training) {
  Tensor t = x;
  for (auto& op : ops) t = op->forward(t, training);
  return t;
}

Tensor UNet::Stage::backward(const Tensor& grad) {
  Tensor g = grad;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) g = (*it)->backward(g);
  return g;
}

UNet::UNet(const UNetConfig& cfg, int in_channels, std::uint64_t init_seed)
    : cfg_(cfg), in_channels_(in_channels) {
  cfg_.validate();
  if (in_channels < 1) throw ConfigError("UNet: in_channels must be >= 1");
  const int depth = cfg_.down_blocks;
  std::uint64_t conv_ordinal = 0;
  auto next_key = [&] { return key_combine(init_seed, 0x636f6e76ULL, conv_ordinal++); };

  auto conv_bn_relu = [&](Stage& stage, int in_ch, int out_ch) {
    stage.ops.push_back(std::make_unique<Conv2d>(in_ch, out_ch, next_key()));
    stage.ops.push_back(std::make_unique<BatchNorm2d>(out_ch));
    stage.ops.push_back(std::make_unique<ReLU>());
  };

  encoder_.resize(depth);
  pools_.resize(depth);
  int ch = in_channels;
  for (int i = 0; i < depth; ++i) {
    const int filters = cfg_.filters_at(i);
    for (int k = 0; k < cfg_.convs_per_block; ++k) {
      conv_bn_relu(encoder_[i], k == 0 ? ch : filters, filters);
    }
    ch = filters;
  }

  upsamplers_.resize(depth);
  up_convs_.resize(depth);
  decoder_.resize(depth);
  // Decoding runs j = depth-1 .. 0; entry channels mirror the encoder.
  for (int j = depth - 1; j >= 0; --j) {
    const int filters = cfg_.filters_at(j);
    const int entry = (j == depth - 1) ? cfg_.filters_at(depth - 1) : cfg_.filters_at(j + 1);
    conv_bn_relu(up_convs_[j], entry, filters);
    for (int k = 0; k < cfg_.convs_per_block; ++k) {
      conv_bn_relu(decoder_[j], k == 0 ? 2 * filters : filters, filters);
    }
  }

  head_.ops.push_back(std::make_unique<Conv2d>(cfg_.filters_at(0), 1, next_key()));
  head_.ops.push_back(std::make_unique<Sigmoid>());
}

Tensor UNet::forward(const Tensor& x, bool training) {
  const int stride = 1 << cfg_.down_blocks;
  if (x.h % stride != 0 || x.w % stride != 0)
    throw ConfigError("UNet: input side " + std::to_string(x.h) + "x" + std::to_string(x.w) +
                      " not divisible by 2^" + std::to_string(cfg_.down_blocks));
  if (x.c != in_channels_) throw ShapeError("UNet: input channel mismatch");

  const int depth = cfg_.down_blocks;
  skips_.assign(depth, Tensor());
  Tensor t = x;
  for (int i = 0; i < depth; ++i) {
    t = encoder_[i].forward(t, training);
    skips_[i] = t;
    t = pools_[i].forward(t, training);
  }
  for (int j = depth - 1; j >= 0; --j) {
    t = upsamplers_[j].forward(t, training);
    t = up_convs_[j].forward(t, training);
    t = concat_channels(t, skips_[j]);
    t = decoder_[j].forward(t, training);
  }
  return head_.forward(t, training);
}

Tensor UNet::backward(const Tensor& grad_out) {
  const int depth = cfg_.down_blocks;
  skip_grads_.assign(depth, Tensor());
  Tensor g = head_.backward(grad_out);
  for (int j = 0; j < depth; ++j) {
    g = decoder_[j].backward(g);
    Tensor g_dec, g_skip;
    split_channels(g, cfg_.filters_at(j), g_dec, g_skip);
    skip_grads_[j] = std::move(g_skip);
    g = up_convs_[j].backward(g_dec);
    g = upsamplers_[j].backward(g);
  }
  for (int i = depth - 1; i >= 0; --i) {
    g = pools_[i].backward(g);
    for (std::size_t p = 0; p < g.size(); ++p) g.v[p] += skip_grads_[i].v[p];
    g = encoder_[i].backward(g);
  }
  return g;
}

void UNet::collect_params(std::vector<ParamRef>& out) {
  auto collect_stage = [&out](Stage& stage, const std::string& prefix) {
    int conv = 0, bn = 0;
    for (auto& op : stage.ops) {
      if (dynamic_cast<Conv2d*>(op.get()))
        op->collect_params(prefix + ".conv" + std::to_string(conv++), out);
      else if (dynamic_cast<BatchNorm2d*>(op.get()))
        op->collect_params(prefix + ".bn" + std::to_string(bn++), out);
    }
  };
  for (int i = 0; i < cfg_.down_blocks; ++i)
    collect_stage(encoder_[i], "enc" + std::to_string(i));
  for (int j = cfg_.down_blocks - 1; j >= 0; --j) {
    collect_stage(up_convs_[j], "up" + std::to_string(j));
    collect_stage(decoder_[j], "dec" + std::to_string(j));
  }
  collect_stage(head_, "head");
}

void UNet::zero_grad() {
  auto zero_stage = [](Stage& stage) {
    for (auto& op : stage.ops) op->zero_grad();
  };
  for (auto& s : encoder_) zero_stage(s);
  for (auto& s : up_convs_) zero_stage(s);
  for (auto& s : decoder_) zero_stage(s);
  zero_stage(head_);
}

}  // namespace ledscope::nn
