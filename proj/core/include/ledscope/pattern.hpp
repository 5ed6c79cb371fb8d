// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "ledscope/led_array.hpp"
#include "ledscope/optics.hpp"

namespace ledscope {

/// Unconstrained real weight vector over the LED array: the physical layer's
/// parameters. Negative weights are realized in hardware by a two-capture
/// positive/negative split.
struct IlluminationPattern {
  std::vector<double> weights;
  std::string name;        // origin: baseline kind or "learned"
  std::uint64_t seed = 0;  // seed of the run that produced it (0 if none)
  int bits = 0;            // bit depth of the originating task (0 if none)

  int size() const { return static_cast<int>(weights.size()); }
};

/// Linear image formation: I'(r) = sum_n w_n I_n(r). May go negative when
/// weights do.
Image weighted_sum(const ImageStack& stack, const IlluminationPattern& pattern);

/// L1 penalty value and subgradient (sign(0) = 0).
struct L1Penalty {
  double value = 0.0;
  std::vector<double> gradient;
};
L1Penalty l1_penalty(const IlluminationPattern& pattern, double coefficient);

/// Decompose into nonnegative positive/negative parts with
/// weights = positive - negative (the two-capture hardware equivalence).
std::pair<IlluminationPattern, IlluminationPattern> split_pattern(const IlluminationPattern& p);

/// Per-LED exposure compensation for visualization and export only.
IlluminationPattern normalize_by_exposure(const IlluminationPattern& pattern,
                                          const std::vector<double>& exposures);

/// Text table with columns (index, row, col, channel, weight). A nonempty
/// `metadata` is written as a leading '#' comment line (provenance).
void write_pattern_table(const std::filesystem::path& file, const IlluminationPattern& pattern,
                         const LedArray& array, const std::string& metadata = "");
IlluminationPattern read_pattern_table(const std::filesystem::path& file);

/// One 8-bit PGM grid per color channel, weights min/max scaled (range noted
/// in the header comment). Returns the written paths.
std::vector<std::filesystem::path> write_pattern_grids(const std::filesystem::path& dir,
                                                       const std::string& prefix,
                                                       const IlluminationPattern& pattern,
                                                       const LedArray& array,
                                                       const std::string& metadata = "");

}  // namespace ledscope
