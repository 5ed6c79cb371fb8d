// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ledscope/phantom.hpp"

namespace ledscope {

enum class Split { Train, Validation, Test };

std::string split_name(Split split);
Split split_from_name(const std::string& name);

struct SplitCounts {
  int train = 1;
  int validation = 1;
  int test = 1;
};

struct DatasetItem {
  std::string id;
  Split split = Split::Train;
  ImageStack stack;  // normalized so intensities lie in [0, 1] per stack
  Image fluor;       // target in [0, 1]
};

struct Dataset {
  std::vector<DatasetItem> items;
  LedArray array;
  double pixel_size = 0.0;
  int grid = 0;
  std::string manifest;  // canonical structured-text record of provenance

  std::vector<int> indices(Split split) const;
  std::uint64_t manifest_hash() const;
};

/// Simulate one stack per phantom specimen and assign whole specimens to
/// splits. A given source specimen never contributes to more than one split.
Dataset build_dataset(const PhantomParams& params, const LedArray& array, const Pupil& pupil,
                      int grid, double pixel_size, const SplitCounts& counts);

/// Layout: root/split/<train|val|test>/<specimen_id>/ in the stack format,
/// plus a top-level `dataset.manifest`.
void save_dataset(const std::filesystem::path& root, const Dataset& dataset);
Dataset load_dataset(const std::filesystem::path& root);

}  // namespace ledscope
