// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "ledscope/errors.hpp"

namespace ledscope {

/// Dense row-major 2-D field. Used for intensity images (T = double) and
/// complex optical fields (T = std::complex<double>).
template <typename T>
class BasicImage {
 public:
  BasicImage() = default;
  BasicImage(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw ShapeError("image dimensions must be nonnegative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  T& operator()(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }

  T* data() { return v_.data(); }
  const T* data() const { return v_.data(); }
  std::vector<T>& raw() { return v_; }
  const std::vector<T>& raw() const { return v_; }

  bool same_shape(const BasicImage& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  void fill(T value) { std::fill(v_.begin(), v_.end(), value); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> v_;
};

using Image = BasicImage<double>;
using ComplexImage = BasicImage<std::complex<double>>;

inline void require_same_shape(const Image& a, const Image& b, const std::string& ctx) {
  if (!a.same_shape(b))
    throw ShapeError(ctx + ": shape mismatch (" + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ")");
}

inline double image_max(const Image& im) {
  double m = im.size() ? im[0] : 0.0;
  for (std::size_t i = 1; i < im.size(); ++i) m = std::max(m, im[i]);
  return m;
}

inline double image_min(const Image& im) {
  double m = im.size() ? im[0] : 0.0;
  for (std::size_t i = 1; i < im.size(); ++i) m = std::min(m, im[i]);
  return m;
}

inline double image_sum(const Image& im) {
  // Compensated (Kahan) summation keeps aggregation order-independent enough
  // for reproducible reductions.
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < im.size(); ++i) {
    double y = im[i] - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

inline double image_mean(const Image& im) {
  return im.size() ? image_sum(im) / static_cast<double>(im.size()) : 0.0;
}

}  // namespace ledscope
