// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "ledscope/train.hpp"

namespace ledscope {

// Single-file archive: a structured-text header (configs, learned pattern,
// history, tensor directory) followed by the named parameter tensors as
// little-endian float32. The pattern itself is kept at full precision in the
// header so exports round-trip exactly.

void save_checkpoint(const std::filesystem::path& file, const TrainedModel& model);
TrainedModel load_checkpoint(const std::filesystem::path& file);

}  // namespace ledscope
