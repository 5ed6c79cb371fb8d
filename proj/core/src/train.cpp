// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/train.hpp"

#include <algorithm>
#include <cmath>

#include "ledscope/rng.hpp"

namespace ledscope {

namespace {

constexpr std::uint64_t kPatternStream = 0x7061747465726eULL;  // pattern init
constexpr std::uint64_t kNetStream = 0x6e6574696e6974ULL;      // network init
constexpr std::uint64_t kShuffleStream = 0x73687566666cULL;    // epoch shuffles

std::vector<double> initial_pattern_weights(int count, std::uint64_t seed) {
  // Independent uniform on [0, 1/N], then mean-centered so L1 can prune in
  // both directions from the start.
  Prng rng(seed, kPatternStream);
  std::vector<double> w(count);
  double mean = 0.0;
  for (int i = 0; i < count; ++i) {
    w[i] = rng.uniform() / count;
    mean += w[i];
  }
  mean /= count;
  for (double& x : w) x -= mean;
  return w;
}

nn::Tensor batch_datacube(const Dataset& dataset, const std::vector<int>& item_indices) {
  const int n = static_cast<int>(item_indices.size());
  const ImageStack& first = dataset.items[item_indices[0]].stack;
  nn::Tensor t(n, first.count(), first.images[0].rows(), first.images[0].cols());
  for (int b = 0; b < n; ++b) {
    const ImageStack& stack = dataset.items[item_indices[b]].stack;
    for (int led = 0; led < stack.count(); ++led)
      nn::image_into_tensor(stack.images[led], t, b, led);
  }
  return t;
}

nn::Tensor batch_labels(const std::vector<Image>& labels, const std::vector<int>& item_indices) {
  const int n = static_cast<int>(item_indices.size());
  nn::Tensor t(n, 1, labels[item_indices[0]].rows(), labels[item_indices[0]].cols());
  for (int b = 0; b < n; ++b) nn::image_into_tensor(labels[item_indices[b]], t, b, 0);
  return t;
}

struct Snapshot {
  std::vector<std::vector<double>> values;
  void capture(const std::vector<nn::ParamRef>& params) {
    values.clear();
    for (const auto& p : params) values.push_back(*p.value);
  }
  void restore(const std::vector<nn::ParamRef>& params) const {
    for (std::size_t i = 0; i < params.size(); ++i) *params[i].value = values[i];
  }
};

}  // namespace

void TrainConfig::validate() const {
  if (initial_lr <= 0.0) throw ConfigError("TrainConfig: initial_lr must be > 0");
  if (lr_reduce_factor <= 1.0) throw ConfigError("TrainConfig: lr_reduce_factor must be > 1");
  if (lr_patience < 1) throw ConfigError("TrainConfig: lr_patience must be >= 1");
  if (batch_size < 1) throw ConfigError("TrainConfig: batch_size must be >= 1");
  if (l1_coefficient < 0.0) throw ConfigError("TrainConfig: l1_coefficient must be >= 0");
  if (max_epochs < 1) throw ConfigError("TrainConfig: max_epochs must be >= 1");
  if (early_stop_patience < 1) throw ConfigError("TrainConfig: early_stop_patience must be >= 1");
  noise.validate();
}

LossResult training_loss(const nn::Tensor& prediction, const nn::Tensor& label,
                         const IlluminationPattern& pattern, double l1_coefficient) {
  if (!prediction.same_shape(label)) throw ShapeError("training_loss: prediction/label shapes differ");
  LossResult result;
  result.grad = nn::Tensor(prediction.n, prediction.c, prediction.h, prediction.w);
  const double numel = static_cast<double>(prediction.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < prediction.size(); ++i) {
    const double d = prediction.v[i] - label.v[i];
    acc += d * d;
    result.grad.v[i] = 2.0 * d / numel;
  }
  result.value = acc / numel + l1_penalty(pattern, l1_coefficient).value;
  return result;
}

TrainedModel train(const Dataset& dataset, const QuantizationModel& quantizer,
                   const nn::UNetConfig& net_cfg, const TrainConfig& train_cfg, PatternMode mode,
                   const IlluminationPattern* fixed_pattern) {
  net_cfg.validate();
  train_cfg.validate();
  const std::vector<int> train_idx = dataset.indices(Split::Train);
  const std::vector<int> val_idx = dataset.indices(Split::Validation);
  if (train_idx.empty() || val_idx.empty())
    throw ConfigError("train: training and validation splits must be nonempty");
  const int led_count = dataset.array.led_count();
  if (mode == PatternMode::Fixed) {
    if (fixed_pattern == nullptr) throw ConfigError("train: Fixed mode needs a pattern");
    if (fixed_pattern->size() != led_count)
      throw ShapeError("train: fixed pattern length does not match LED array");
  }

  // Labels for every item up front; quantization is cheap and deterministic.
  std::vector<Image> labels(dataset.items.size());
  for (std::size_t i = 0; i < dataset.items.size(); ++i)
    labels[i] = quantize(dataset.items[i].fluor, quantizer);

  nn::PhysicalLayer phys(mode == PatternMode::Learned
                             ? initial_pattern_weights(led_count, train_cfg.seed)
                             : fixed_pattern->weights,
                         /*trainable=*/mode == PatternMode::Learned);
  nn::NoiseLayer noise(train_cfg.noise);
  nn::UNet net(net_cfg, 1, key_combine(train_cfg.seed, kNetStream));

  std::vector<nn::ParamRef> params;
  phys.collect_params("phys", params);
  net.collect_params(params);
  nn::Adam adam(params);
  nn::ParamRef pattern_ref = params.front();  // phys.weights

  auto current_pattern = [&] {
    IlluminationPattern p;
    p.weights = phys.weights();
    p.name = mode == PatternMode::Learned ? "learned" : fixed_pattern->name;
    p.seed = train_cfg.seed;
    p.bits = quantizer.bits;
    return p;
  };

  auto validation_loss = [&]() {
    double acc = 0.0;
    for (int idx : val_idx) {
      nn::Tensor input = batch_datacube(dataset, {idx});
      nn::Tensor label = batch_labels(labels, {idx});
      nn::Tensor t = phys.forward(input, false);
      t = noise.forward(t, false);
      nn::Tensor pred = net.forward(t, false);
      acc += training_loss(pred, label, current_pattern(), train_cfg.l1_coefficient).value;
    }
    return acc / static_cast<double>(val_idx.size());
  };

  TrainedModel model;
  model.net_config = net_cfg;
  model.train_config = train_cfg;
  model.bits = quantizer.bits;
  model.pattern_mode = mode == PatternMode::Learned ? "learned" : fixed_pattern->name;
  model.quantizer = quantizer;
  model.array = dataset.array;
  model.dataset_hash = dataset.manifest_hash();

  double lr = train_cfg.initial_lr;
  double best_val = std::numeric_limits<double>::infinity();
  int lr_bad_epochs = 0;
  int stop_bad_epochs = 0;
  int global_step = 0;
  Snapshot best;
  best.capture(params);

  std::vector<int> order = train_idx;
  for (int epoch = 0; epoch < train_cfg.max_epochs; ++epoch) {
    Prng shuffle_rng(train_cfg.seed, key_combine(kShuffleStream, epoch));
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
      std::swap(order[i], order[shuffle_rng.uniform_int(0, i)]);

    double train_acc = 0.0;
    int steps = 0;
    for (std::size_t start = 0; start < order.size(); start += train_cfg.batch_size) {
      std::vector<int> batch(order.begin() + start,
                             order.begin() + std::min(order.size(),
                                                      start + train_cfg.batch_size));
      phys.zero_grad();
      net.zero_grad();
      nn::Tensor input = batch_datacube(dataset, batch);
      nn::Tensor label = batch_labels(labels, batch);
      nn::Tensor t = phys.forward(input, true);
      t = noise.forward(t, true);
      nn::Tensor pred = net.forward(t, true);
      LossResult loss = training_loss(pred, label, current_pattern(), train_cfg.l1_coefficient);
      if (!std::isfinite(loss.value))
        throw TrainingDiverged("train: non-finite loss at epoch " + std::to_string(epoch) +
                                   " step " + std::to_string(global_step),
                               epoch, global_step, loss.value);
      nn::Tensor g = net.backward(loss.grad);
      g = noise.backward(g);
      phys.backward(g);
      if (mode == PatternMode::Learned) {
        L1Penalty l1 = l1_penalty(current_pattern(), train_cfg.l1_coefficient);
        for (std::size_t i = 0; i < pattern_ref.grad->size(); ++i)
          (*pattern_ref.grad)[i] += l1.gradient[i];
      }
      adam.step(lr);
      train_acc += loss.value;
      ++steps;
      ++global_step;
    }

    const double train_loss_epoch = train_acc / steps;
    const double val_loss_epoch = validation_loss();
    model.history.push_back({epoch, train_loss_epoch, val_loss_epoch, lr});

    if (val_loss_epoch < best_val) {
      best_val = val_loss_epoch;
      best.capture(params);
      lr_bad_epochs = 0;
      stop_bad_epochs = 0;
    } else {
      ++lr_bad_epochs;
      ++stop_bad_epochs;
      if (lr_bad_epochs >= train_cfg.lr_patience) {
        lr /= train_cfg.lr_reduce_factor;
        lr_bad_epochs = 0;
      }
      if (stop_bad_epochs >= train_cfg.early_stop_patience) break;
    }
  }

  best.restore(params);
  model.pattern = current_pattern();
  model.network = std::make_unique<nn::UNet>(std::move(net));
  return model;
}

Image infer_continuous(const TrainedModel& model, const ImageStack& stack) {
  Image synth = weighted_sum(stack, model.pattern);
  nn::Tensor t(1, 1, synth.rows(), synth.cols());
  nn::image_into_tensor(synth, t, 0, 0);
  std::lock_guard<std::mutex> lock(model.infer_mutex);
  nn::Tensor pred = model.network->forward(t, false);
  return nn::tensor_to_image(pred);
}

Image infer(const TrainedModel& model, const ImageStack& stack, int bits) {
  return round_to_depth(infer_continuous(model, stack), bits);
}

}  // namespace ledscope
