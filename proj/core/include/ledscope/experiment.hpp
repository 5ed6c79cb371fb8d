// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ledscope/dataset.hpp"
#include "ledscope/metrics.hpp"
#include "ledscope/train.hpp"

namespace ledscope {

/// Everything one experiment needs: optics geometry, phantom parameters,
/// network/training configuration and the sweep axes. Loadable from a
/// structured config file where every training hyperparameter has an
/// explicit key and unknown keys are rejected.
struct ExperimentConfig {
  // optics
  int grid = 64;
  double pixel_size = 1e-6;  // [m]
  double na = 0.085;
  LedArray array;

  // data
  PhantomParams phantom;
  SplitCounts counts;

  // model + training
  nn::UNetConfig network;
  TrainConfig training;  // per-cell seed is overridden by the sweep axis

  // sweep axes
  std::vector<std::string> modes = {"learned", "center", "all", "dc", "offaxis", "random"};
  std::vector<int> depths = {1, 7};
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::uint64_t random_baseline_seed = 2024;  // one fixed seed per experiment

  std::string output_dir = "out";
  std::string profile = "desk";
  int jobs = 1;  // parallel sweep cells

  static ExperimentConfig desk_profile();
  static ExperimentConfig paper_profile();
  static ExperimentConfig profile_by_name(const std::string& name);

  /// Profile defaults overridden by the config file's keys. Unknown keys and
  /// invalid values raise ConfigError naming the offending path.
  static ExperimentConfig load(const std::filesystem::path& file,
                               const std::string& base_profile = "");

  std::string canonical_json() const;
  /// Hash of the full resolved configuration; embedded in artifacts.
  std::uint64_t hash() const;
  /// Hash of the training-relevant slice plus (mode, depth, seed): the sweep
  /// cell identity. Changing sweep axes or output paths does not invalidate
  /// completed cells.
  std::string cell_key(const std::string& mode, int depth, std::uint64_t seed) const;

  Pupil pupil() const { return Pupil{na}; }
  void validate() const;
};

struct SweepOutcome {
  std::vector<EvalRow> rows;
  std::vector<std::string> failures;  // "cell_key: message"
  int cells_run = 0;
  int cells_skipped = 0;
};

/// Build the phantom dataset and persist it under <output_dir>/dataset.
std::filesystem::path cmd_simulate(const ExperimentConfig& cfg);

/// Run the (mode x depth x seed) sweep against the simulated dataset:
/// k-means labels per depth, training, test-split evaluation, checkpoint and
/// pattern export per cell, and the assembled report tables. Completed cells
/// are skipped on resume.
SweepOutcome cmd_train(const ExperimentConfig& cfg);

/// Re-evaluate existing checkpoints against the dataset's test split.
std::vector<EvalRow> cmd_evaluate(const ExperimentConfig& cfg,
                                  const std::optional<std::filesystem::path>& checkpoint = {});

/// Pattern table, positive/negative split tables and per-channel grid
/// rasters; applies exposure normalization when an exposure file is given.
std::vector<std::filesystem::path> cmd_export_pattern(
    const std::filesystem::path& checkpoint_file, const std::filesystem::path& out_dir,
    const std::optional<std::filesystem::path>& exposure_file = {});

struct SpectrumRow {
  std::string pattern;
  int bits = 1;
  std::uint64_t seed = 0;
  double first_moment = 0.0;
};

/// Synthesize the test set under each checkpoint's pattern and emit radial
/// power profiles plus the first-moment-vs-bit-depth table.
std::vector<SpectrumRow> cmd_analyze_spectrum(const ExperimentConfig& cfg,
                                              const std::optional<std::filesystem::path>& checkpoint,
                                              bool include_dc = true);

/// Per-LED exposure file: one positive value per line.
std::vector<double> read_exposure_file(const std::filesystem::path& file);

}  // namespace ledscope
