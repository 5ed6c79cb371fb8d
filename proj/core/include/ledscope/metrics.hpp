// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ledscope/pattern.hpp"

namespace ledscope {

// ------------------------------------------------------------- baselines

/// The standard illumination arrangements used for comparison.
struct BaselineKind {
  enum Kind { Center, All, DC, OffAxis, Random } kind = Center;
  std::uint64_t random_seed = 0;  // used by Random only

  static BaselineKind center() { return {Center, 0}; }
  static BaselineKind all() { return {All, 0}; }
  static BaselineKind dc() { return {DC, 0}; }
  static BaselineKind off_axis() { return {OffAxis, 0}; }
  static BaselineKind random(std::uint64_t seed) { return {Random, seed}; }

  std::string name() const;
  static BaselineKind from_name(const std::string& name, std::uint64_t random_seed = 0);
};

/// Construct a standard pattern on the given array:
///  - Center:  weight 1 on every color channel of the center LED
///  - All:     weight 1 everywhere
///  - DC:      +1 / -1 on bright-field LEDs in the left / right half-plane,
///             0 on the center column (differential contrast)
///  - OffAxis: weight 1 on the channels of the LED nearest 4 mm lateral offset
///  - Random:  independent uniform [0, 1] weights from a fixed seed
IlluminationPattern standard_pattern(const BaselineKind& kind, const LedArray& array,
                                     const Pupil& pupil);

// --------------------------------------------------------------- metrics

double mse(const Image& a, const Image& b);

/// Mean local SSIM with the canonical 11x11 Gaussian window (sigma 1.5),
/// C1 = (0.01 L)^2, C2 = (0.03 L)^2, dynamic range L = 1. Windows are fully
/// contained in the image; inputs smaller than the window are an error.
double ssim(const Image& a, const Image& b);

/// R = min(standard MSEs) / learned MSE (Eq. behind the relative
/// performance curves). A zero learned MSE reports +infinity.
double relative_mse(const std::vector<double>& standard_mses, double learned_mse);

// ------------------------------------------------- spectrum analysis

struct SpectrumProfile {
  std::vector<double> radial_power;  // indexed by integer radius bin
  double first_moment = 0.0;         // sum r*P(r) / sum P(r); 0 when empty
};

/// Average power spectrum of a set of images, binned by integer radius from
/// the zero-frequency bin. `include_dc` keeps or drops the r = 0 bin from
/// both the profile sums and the moment.
SpectrumProfile avg_spatial_freq_power(const std::vector<Image>& images, bool include_dc = true);

// ------------------------------------------------------------ EvalReport

struct EvalRow {
  std::string pattern;  // "learned", "center", "all", "dc", "offaxis", "random"
  int bits = 1;
  std::uint64_t seed = 0;
  double mse = 0.0;
  double ssim = 0.0;
  std::string cell_key;  // provenance: sweep cell hash (hex)
};

struct PatternDepthSummary {
  std::string pattern;
  int bits = 1;
  int seeds = 0;
  double mse_mean = 0.0, mse_std = 0.0;
  double ssim_mean = 0.0, ssim_std = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;

  std::vector<PatternDepthSummary> summarize() const;
  /// Seed-averaged R per bit depth: min over standard patterns of mean MSE,
  /// divided by the learned mean MSE. Empty when a side is missing.
  std::vector<std::pair<int, double>> relative_mse_per_depth() const;
};

/// Delimiter-separated tables: the per-run rows and a summary with
/// mean/std and R_MSE per depth.
void write_report_rows(const std::filesystem::path& file, const std::vector<EvalRow>& rows);
std::vector<EvalRow> read_report_rows(const std::filesystem::path& file);
void write_report_summary(const std::filesystem::path& file, const EvalReport& report);

}  // namespace ledscope
