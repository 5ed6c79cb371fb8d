// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "ledscope/image.hpp"

namespace ledscope::nn {

/// Dense NCHW tensor of doubles. Double precision keeps finite-difference
/// gradient checks meaningful at desk scale.
struct Tensor {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int n, int c, int h, int w)
      : n(n), c(c), h(h), w(w),
        v(static_cast<std::size_t>(n) * c * h * w, 0.0) {}

  std::size_t size() const { return v.size(); }
  std::size_t plane() const { return static_cast<std::size_t>(h) * w; }

  double& at(int in, int ic, int iy, int ix) {
    return v[((static_cast<std::size_t>(in) * c + ic) * h + iy) * w + ix];
  }
  double at(int in, int ic, int iy, int ix) const {
    return v[((static_cast<std::size_t>(in) * c + ic) * h + iy) * w + ix];
  }

  double* channel(int in, int ic) { return v.data() + (static_cast<std::size_t>(in) * c + ic) * plane(); }
  const double* channel(int in, int ic) const {
    return v.data() + (static_cast<std::size_t>(in) * c + ic) * plane();
  }

  bool same_shape(const Tensor& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }
};

/// Single-channel batch entry -> Image.
inline Image tensor_to_image(const Tensor& t, int batch_index = 0, int channel = 0) {
  Image out(t.h, t.w);
  const double* src = t.channel(batch_index, channel);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = src[i];
  return out;
}

inline void image_into_tensor(const Image& im, Tensor& t, int batch_index, int channel) {
  double* dst = t.channel(batch_index, channel);
  for (std::size_t i = 0; i < im.size(); ++i) dst[i] = im[i];
}

}  // namespace ledscope::nn
