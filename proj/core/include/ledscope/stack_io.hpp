// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "ledscope/optics.hpp"

namespace ledscope {

// One directory per field of view: a `manifest` (structured text) plus one
// raw little-endian float32 file per LED image (`led_<index>.raw`, row-major)
// and the fluorescence target as `fluor.raw`.

void save_stack(const std::filesystem::path& dir, const ImageStack& stack, const Image& fluor,
                const LedArray& array, double pixel_size);

struct LoadedStack {
  ImageStack stack;
  Image fluor;
  LedArray array;
  double pixel_size = 0.0;
};

LoadedStack load_stack(const std::filesystem::path& dir);

/// Raw little-endian float32 image IO (row-major, no header).
void write_raw_f32(const std::filesystem::path& file, const Image& image);
Image read_raw_f32(const std::filesystem::path& file, int rows, int cols);

}  // namespace ledscope
