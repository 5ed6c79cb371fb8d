// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

// Internal JSON encodings shared by the checkpoint archive and config files.
// Key names follow the run-configuration vocabulary exposed in experiment
// config files.

#pragma once

#include <nlohmann/json.hpp>

#include "ledscope/train.hpp"

namespace ledscope {

inline nlohmann::json unet_config_to_json(const nn::UNetConfig& c) {
  return {{"initial_filters", c.initial_filters},
          {"filter_expansion_ratio", c.expansion_ratio},
          {"convs_per_block", c.convs_per_block},
          {"down_blocks", c.down_blocks},
          {"up_blocks", c.up_blocks}};
}

inline nn::UNetConfig unet_config_from_json(const nlohmann::json& j) {
  nn::UNetConfig c;
  c.initial_filters = j.at("initial_filters");
  c.expansion_ratio = j.at("filter_expansion_ratio");
  c.convs_per_block = j.at("convs_per_block");
  c.down_blocks = j.at("down_blocks");
  c.up_blocks = j.at("up_blocks");
  return c;
}

inline nlohmann::json train_config_to_json(const TrainConfig& c) {
  return {{"optimizer", "adam"},
          {"initial_learning_rate", c.initial_lr},
          {"lr_reduction_factor", c.lr_reduce_factor},
          {"lr_reduction_patience", c.lr_patience},
          {"batch_size", c.batch_size},
          {"l1_penalty", c.l1_coefficient},
          {"noise_level_k", c.noise.k},
          {"noise_enabled", c.noise.enabled},
          {"noise_seed", c.noise.seed},
          {"max_epochs", c.max_epochs},
          {"early_stop_patience", c.early_stop_patience},
          {"seed", c.seed}};
}

inline TrainConfig train_config_from_json(const nlohmann::json& j) {
  TrainConfig c;
  if (j.at("optimizer") != "adam")
    throw ConfigError("train config: only the adam optimizer is supported");
  c.initial_lr = j.at("initial_learning_rate");
  c.lr_reduce_factor = j.at("lr_reduction_factor");
  c.lr_patience = j.at("lr_reduction_patience");
  c.batch_size = j.at("batch_size");
  c.l1_coefficient = j.at("l1_penalty");
  c.noise.k = j.at("noise_level_k");
  c.noise.enabled = j.at("noise_enabled");
  c.noise.seed = j.at("noise_seed");
  c.max_epochs = j.at("max_epochs");
  c.early_stop_patience = j.at("early_stop_patience");
  c.seed = j.at("seed");
  return c;
}

inline nlohmann::json history_to_json(const std::vector<EpochStats>& history) {
  nlohmann::json arr = nlohmann::json::array();
  for (const EpochStats& e : history)
    arr.push_back({{"epoch", e.epoch},
                   {"train_loss", e.train_loss},
                   {"val_loss", e.val_loss},
                   {"learning_rate", e.learning_rate}});
  return arr;
}

inline std::vector<EpochStats> history_from_json(const nlohmann::json& arr) {
  std::vector<EpochStats> history;
  for (const auto& e : arr)
    history.push_back({e.at("epoch"), e.at("train_loss"), e.at("val_loss"), e.at("learning_rate")});
  return history;
}

}  // namespace ledscope
