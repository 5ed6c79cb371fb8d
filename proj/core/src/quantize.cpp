// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ledscope {

namespace {

constexpr double kMoveThreshold = 1e-5;
constexpr int kMaxIterations = 20;

void check_bits(int bits) {
  if (bits < 1 || bits > 7)
    throw std::invalid_argument("bit depth must be in [1, 7], got " + std::to_string(bits));
}

/// Cluster of `v` under sorted means: index of the first midpoint >= v,
/// which sends exact midpoints to the lower mean.
int assign_cluster(double v, const std::vector<double>& midpoints) {
  return static_cast<int>(std::lower_bound(midpoints.begin(), midpoints.end(), v) -
                          midpoints.begin());
}

std::vector<double> midpoints_of(const std::vector<double>& means) {
  std::vector<double> mids(means.size() - 1);
  for (std::size_t i = 0; i + 1 < means.size(); ++i) mids[i] = 0.5 * (means[i] + means[i + 1]);
  return mids;
}

}  // namespace

QuantizationModel fit_kmeans(std::span<const double> values, int bits) {
  check_bits(bits);
  if (values.empty()) throw std::invalid_argument("fit_kmeans: empty pixel collection");
  for (double v : values)
    if (v < 0.0 || v > 1.0)
      throw std::invalid_argument("fit_kmeans: values must lie in [0, 1]");

  QuantizationModel model;
  model.bits = bits;
  const int k = model.levels();
  model.means.resize(k);
  for (int i = 1; i <= k; ++i) model.means[i - 1] = static_cast<double>(i) / k;

  std::vector<double> sums(k);
  std::vector<std::size_t> counts(k);
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    model.iterations_used = iter;
    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), std::size_t{0});

    auto mids = midpoints_of(model.means);
    for (double v : values) {
      int c = assign_cluster(v, mids);
      sums[c] += v;
      counts[c] += 1;
    }

    double max_move = 0.0;
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;  // empty cluster keeps its previous mean
      double updated = sums[c] / static_cast<double>(counts[c]);
      max_move = std::max(max_move, std::abs(updated - model.means[c]));
      model.means[c] = updated;
    }
    if (max_move < kMoveThreshold) {
      model.converged = true;
      break;
    }
  }

  // Exact duplicates can only arise from pathological inputs; collapse them
  // so the level set stays strictly increasing.
  model.means.erase(std::unique(model.means.begin(), model.means.end()), model.means.end());
  return model;
}

double quantize_value(double value, const QuantizationModel& model) {
  if (model.means.empty()) throw std::invalid_argument("quantize: unfitted model");
  if (model.means.size() == 1) return model.means[0];
  auto mids = midpoints_of(model.means);
  return model.means[assign_cluster(value, mids)];
}

Image quantize(const Image& image, const QuantizationModel& model) {
  if (model.means.empty()) throw std::invalid_argument("quantize: unfitted model");
  auto mids = midpoints_of(model.means);
  Image out(image.rows(), image.cols());
  for (std::size_t i = 0; i < image.size(); ++i)
    out[i] = model.means[assign_cluster(image[i], mids)];
  return out;
}

double round_value_to_depth(double value, int bits) {
  const int steps = (1 << bits) - 1;
  double scaled = std::round(value * steps);
  scaled = std::clamp(scaled, 0.0, static_cast<double>(steps));
  return scaled / steps;
}

Image round_to_depth(const Image& prediction, int bits) {
  check_bits(bits);
  Image out(prediction.rows(), prediction.cols());
  for (std::size_t i = 0; i < prediction.size(); ++i)
    out[i] = round_value_to_depth(prediction[i], bits);
  return out;
}

std::string QuantizationModel::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << "bits " << bits << "\n";
  out << "converged " << (converged ? 1 : 0) << "\n";
  out << "iterations " << iterations_used << "\n";
  out << "means";
  for (double m : means) out << " " << m;
  out << "\n";
  return out.str();
}

QuantizationModel QuantizationModel::deserialize(const std::string& text) {
  std::istringstream in(text);
  QuantizationModel model;
  std::string key;
  while (in >> key) {
    if (key == "bits") {
      in >> model.bits;
    } else if (key == "converged") {
      int flag = 0;
      in >> flag;
      model.converged = flag != 0;
    } else if (key == "iterations") {
      in >> model.iterations_used;
    } else if (key == "means") {
      double v;
      while (in >> v) model.means.push_back(v);
    } else {
      throw std::invalid_argument("QuantizationModel: unknown key " + key);
    }
  }
  if (model.means.empty()) throw std::invalid_argument("QuantizationModel: no means");
  return model;
}

}  // namespace ledscope
