// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ledscope {

Image weighted_sum(const ImageStack& stack, const IlluminationPattern& pattern) {
  if (stack.count() != pattern.size())
    throw ShapeError("weighted_sum: " + std::to_string(stack.count()) + " stack images vs " +
                     std::to_string(pattern.size()) + " weights");
  if (stack.count() == 0) throw ShapeError("weighted_sum: empty stack");
  Image out(stack.images[0].rows(), stack.images[0].cols());
  for (int n = 0; n < stack.count(); ++n) {
    const Image& im = stack.images[n];
    require_same_shape(out, im, "weighted_sum");
    const double w = pattern.weights[n];
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * im[i];
  }
  return out;
}

L1Penalty l1_penalty(const IlluminationPattern& pattern, double coefficient) {
  if (coefficient < 0.0) throw std::invalid_argument("l1_penalty: coefficient must be >= 0");
  L1Penalty result;
  result.gradient.resize(pattern.weights.size());
  for (std::size_t i = 0; i < pattern.weights.size(); ++i) {
    double w = pattern.weights[i];
    result.value += coefficient * std::abs(w);
    result.gradient[i] = w > 0.0 ? coefficient : (w < 0.0 ? -coefficient : 0.0);
  }
  return result;
}

std::pair<IlluminationPattern, IlluminationPattern> split_pattern(const IlluminationPattern& p) {
  IlluminationPattern pos = p, neg = p;
  pos.name = p.name + "+";
  neg.name = p.name + "-";
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    pos.weights[i] = std::max(p.weights[i], 0.0);
    neg.weights[i] = std::max(-p.weights[i], 0.0);
  }
  return {std::move(pos), std::move(neg)};
}

IlluminationPattern normalize_by_exposure(const IlluminationPattern& pattern,
                                          const std::vector<double>& exposures) {
  if (exposures.size() != pattern.weights.size())
    throw ShapeError("normalize_by_exposure: exposure count mismatch");
  for (double e : exposures)
    if (e <= 0.0) throw std::invalid_argument("normalize_by_exposure: exposures must be > 0");
  IlluminationPattern out = pattern;
  for (std::size_t i = 0; i < out.weights.size(); ++i) out.weights[i] /= exposures[i];
  return out;
}

void write_pattern_table(const std::filesystem::path& file, const IlluminationPattern& pattern,
                         const LedArray& array, const std::string& metadata) {
  if (pattern.size() != array.led_count())
    throw ShapeError("write_pattern_table: pattern length does not match LED array");
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.precision(17);
  if (!metadata.empty()) out << "# " << metadata << "\n";
  out << "index,row,col,channel,weight\n";
  for (int i = 0; i < pattern.size(); ++i) {
    auto pos = array.grid_pos(i);
    out << i << "," << pos.row << "," << pos.col << "," << pos.channel << ","
        << pattern.weights[i] << "\n";
  }
}

IlluminationPattern read_pattern_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::string line;
  std::getline(in, line);  // header
  IlluminationPattern pattern;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    int col = 0;
    double weight = 0.0;
    while (std::getline(row, field, ',')) {
      if (col == 4) weight = std::stod(field);
      ++col;
    }
    if (col != 5) throw std::runtime_error("malformed pattern table row: " + line);
    pattern.weights.push_back(weight);
  }
  return pattern;
}

std::vector<std::filesystem::path> write_pattern_grids(const std::filesystem::path& dir,
                                                       const std::string& prefix,
                                                       const IlluminationPattern& pattern,
                                                       const LedArray& array) {
  if (pattern.size() != array.led_count())
    throw ShapeError("write_pattern_grids: pattern length does not match LED array");
  std::filesystem::create_directories(dir);
  double lo = *std::min_element(pattern.weights.begin(), pattern.weights.end());
  double hi = *std::max_element(pattern.weights.begin(), pattern.weights.end());
  double span = hi > lo ? hi - lo : 1.0;

  std::vector<std::filesystem::path> written;
  for (int ch = 0; ch < array.channels(); ++ch) {
    int nm = static_cast<int>(std::lround(array.wavelengths[ch] * 1e9));
    auto file = dir / (prefix + "_ch" + std::to_string(ch) + "_" + std::to_string(nm) + "nm.pgm");
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "P5\n# weight range [" << lo << ", " << hi << "]\n"
        << array.cols << " " << array.rows << "\n255\n";
    for (int r = 0; r < array.rows; ++r) {
      for (int c = 0; c < array.cols; ++c) {
        double w = pattern.weights[array.index_of(r, c, ch)];
        auto byte = static_cast<unsigned char>(std::lround((w - lo) / span * 255.0));
        out.put(static_cast<char>(byte));
      }
    }
    written.push_back(file);
  }
  return written;
}

}  // namespace ledscope
