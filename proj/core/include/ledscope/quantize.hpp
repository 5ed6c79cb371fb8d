// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "ledscope/image.hpp"

namespace ledscope {

/// Global k-means level set mapping continuous fluorescence in [0, 1] to
/// k = 2^bits labels. Fit once on the training split and reused everywhere.
struct QuantizationModel {
  int bits = 1;
  std::vector<double> means;  // strictly increasing after fitting
  bool converged = false;
  int iterations_used = 0;

  int levels() const { return 1 << bits; }

  /// Structured-text round trip.
  std::string serialize() const;
  static QuantizationModel deserialize(const std::string& text);
};

/// Naive 1-D k-means with uniform initial means m_i = i/k (1 <= i <= k),
/// iterated until every mean moves less than 1e-5 or 20 iterations pass.
/// An empty cluster keeps its previous mean; exact duplicate means are
/// collapsed after fitting.
QuantizationModel fit_kmeans(std::span<const double> values, int bits);

/// Each pixel replaced by its nearest mean; equidistant pixels take the
/// lower mean.
Image quantize(const Image& image, const QuantizationModel& model);
double quantize_value(double value, const QuantizationModel& model);

/// Uniform rounding to the grid {j/(2^bits - 1)}; no k-means involved.
Image round_to_depth(const Image& prediction, int bits);
double round_value_to_depth(double value, int bits);

}  // namespace ledscope
