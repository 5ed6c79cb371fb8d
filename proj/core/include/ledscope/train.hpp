// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ledscope/dataset.hpp"
#include "ledscope/nn/unet.hpp"
#include "ledscope/pattern.hpp"
#include "ledscope/quantize.hpp"

namespace ledscope {

struct TrainConfig {
  double initial_lr = 0.005;
  double lr_reduce_factor = 3.1622776601683795;  // sqrt(10)
  int lr_patience = 5;
  int batch_size = 4;
  double l1_coefficient = 0.0004;
  NoiseConfig noise;
  int max_epochs = 150;
  int early_stop_patience = 15;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class PatternMode { Learned, Fixed };

struct EpochStats {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double learning_rate = 0.0;
};

/// Best-validation snapshot of a training run: network parameters, the
/// illumination pattern, per-epoch history and provenance. Immutable after
/// training; infer() serializes access internally so shared read-only use
/// is safe.
struct TrainedModel {
  nn::UNetConfig net_config;
  TrainConfig train_config;
  int bits = 1;
  std::string pattern_mode;  // "learned" or the fixed pattern's name
  IlluminationPattern pattern;
  QuantizationModel quantizer;
  LedArray array;  // geometry the pattern maps onto
  std::vector<EpochStats> history;
  std::uint64_t dataset_hash = 0;
  std::uint64_t config_hash = 0;
  std::unique_ptr<nn::UNet> network;
  mutable std::mutex infer_mutex;

  TrainedModel() = default;
  TrainedModel(TrainedModel&& o) noexcept
      : net_config(o.net_config), train_config(o.train_config), bits(o.bits),
        pattern_mode(std::move(o.pattern_mode)), pattern(std::move(o.pattern)),
        quantizer(std::move(o.quantizer)), array(std::move(o.array)),
        history(std::move(o.history)), dataset_hash(o.dataset_hash),
        config_hash(o.config_hash), network(std::move(o.network)) {}
  TrainedModel& operator=(TrainedModel&&) = delete;
};

/// Training objective: mean squared error over all pixels plus the L1
/// pattern penalty. The returned gradient is with respect to the prediction.
struct LossResult {
  double value = 0.0;
  nn::Tensor grad;
};
LossResult training_loss(const nn::Tensor& prediction, const nn::Tensor& label,
                         const IlluminationPattern& pattern, double l1_coefficient);

/// Joint optimization of the U-Net and (in Learned mode) the illumination
/// pattern. Labels come from quantizing each item's fluorescence with
/// `quantizer`. In Fixed mode the supplied pattern is excluded from the
/// gradient set and returned bit-identical.
TrainedModel train(const Dataset& dataset, const QuantizationModel& quantizer,
                   const nn::UNetConfig& net_cfg, const TrainConfig& train_cfg, PatternMode mode,
                   const IlluminationPattern* fixed_pattern = nullptr);

/// Synthesize with the learned pattern (noise off), run the network in
/// evaluation mode, and round to the target bit depth.
Image infer(const TrainedModel& model, const ImageStack& stack, int bits);

/// infer() without the final rounding; used by spectrum analysis and tests.
Image infer_continuous(const TrainedModel& model, const ImageStack& stack);

}  // namespace ledscope
