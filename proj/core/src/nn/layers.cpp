// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/nn/layers.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstring>

#include "ledscope/rng.hpp"

namespace ledscope::nn {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using MapConstMat = Eigen::Map<const RowMat>;

constexpr int kK = 3;  // kernel side; padding 1 keeps spatial size

/// im2col for a single batch item: (in_ch*9) x (h*w), row-major.
void im2col(const double* x, int in_ch, int h, int w, std::vector<double>& col) {
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  col.assign(static_cast<std::size_t>(in_ch) * kK * kK * plane, 0.0);
  for (int ic = 0; ic < in_ch; ++ic) {
    const double* src_ch = x + ic * plane;
    for (int ky = 0; ky < kK; ++ky) {
      for (int kx = 0; kx < kK; ++kx) {
        double* dst_row = col.data() + ((static_cast<std::size_t>(ic) * kK + ky) * kK + kx) * plane;
        const int shift = kx - 1;
        const int x0 = shift < 0 ? -shift : 0;        // first valid output x
        const int x1 = shift > 0 ? w - shift : w;     // one past last valid
        for (int y = 0; y < h; ++y) {
          const int sy = y + ky - 1;
          if (sy < 0 || sy >= h) continue;
          std::memcpy(dst_row + static_cast<std::size_t>(y) * w + x0,
                      src_ch + static_cast<std::size_t>(sy) * w + x0 + shift,
                      static_cast<std::size_t>(x1 - x0) * sizeof(double));
        }
      }
    }
  }
}

/// Scatter-accumulate of an im2col-shaped gradient back onto the input grid.
void col2im_accumulate(const std::vector<double>& col, int in_ch, int h, int w, double* dx) {
  const std::size_t plane = static_cast<std::size_t>(h) * w;
  for (int ic = 0; ic < in_ch; ++ic) {
    double* dst_ch = dx + ic * plane;
    for (int ky = 0; ky < kK; ++ky) {
      for (int kx = 0; kx < kK; ++kx) {
        const double* src_row =
            col.data() + ((static_cast<std::size_t>(ic) * kK + ky) * kK + kx) * plane;
        const int shift = kx - 1;
        const int x0 = shift < 0 ? -shift : 0;
        const int x1 = shift > 0 ? w - shift : w;
        for (int y = 0; y < h; ++y) {
          const int sy = y + ky - 1;
          if (sy < 0 || sy >= h) continue;
          const double* s = src_row + static_cast<std::size_t>(y) * w + x0;
          double* d = dst_ch + static_cast<std::size_t>(sy) * w + x0 + shift;
          for (int i = 0; i < x1 - x0; ++i) d[i] += s[i];
        }
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- Conv2d

Conv2d::Conv2d(int in_channels, int out_channels, std::uint64_t init_key)
    : in_ch_(in_channels), out_ch_(out_channels) {
  const int fan_in = in_ch_ * kK * kK;
  weight_.resize(static_cast<std::size_t>(out_ch_) * fan_in);
  weight_grad_.assign(weight_.size(), 0.0);
  bias_.assign(out_ch_, 0.0);
  bias_grad_.assign(out_ch_, 0.0);
  const double bound = std::sqrt(6.0 / fan_in);  // Kaiming-uniform, ReLU gain
  for (std::size_t i = 0; i < weight_.size(); ++i)
    weight_[i] = (key_uniform(key_combine(init_key, i)) * 2.0 - 1.0) * bound;
}

Tensor Conv2d::forward(const Tensor& x, bool) {
  if (x.c != in_ch_) throw ShapeError("Conv2d: input channel mismatch");
  input_ = x;
  Tensor out(x.n, out_ch_, x.h, x.w);
  const int fan_in = in_ch_ * kK * kK;
  const std::size_t plane = x.plane();
  std::vector<double> col;
  MapConstMat wm(weight_.data(), out_ch_, fan_in);
  for (int b = 0; b < x.n; ++b) {
    im2col(x.channel(b, 0), in_ch_, x.h, x.w, col);
    MapConstMat colm(col.data(), fan_in, static_cast<Eigen::Index>(plane));
    MapMat outm(out.channel(b, 0), out_ch_, static_cast<Eigen::Index>(plane));
    outm.noalias() = wm * colm;
    for (int oc = 0; oc < out_ch_; ++oc) outm.row(oc).array() += bias_[oc];
  }
  return out;
}

Tensor Conv2d::backward(const Tensor& grad_out) {
  const Tensor& x = input_;
  if (!(grad_out.n == x.n && grad_out.c == out_ch_ && grad_out.h == x.h && grad_out.w == x.w))
    throw ShapeError("Conv2d: gradient shape mismatch");
  Tensor dx(x.n, x.c, x.h, x.w);
  const int fan_in = in_ch_ * kK * kK;
  const std::size_t plane = x.plane();
  std::vector<double> col, dcol(static_cast<std::size_t>(fan_in) * plane);
  MapConstMat wm(weight_.data(), out_ch_, fan_in);
  MapMat dwm(weight_grad_.data(), out_ch_, fan_in);
  for (int b = 0; b < x.n; ++b) {
    im2col(x.channel(b, 0), in_ch_, x.h, x.w, col);
    MapConstMat colm(col.data(), fan_in, static_cast<Eigen::Index>(plane));
    MapConstMat gm(grad_out.channel(b, 0), out_ch_, static_cast<Eigen::Index>(plane));
    dwm.noalias() += gm * colm.transpose();
    for (int oc = 0; oc < out_ch_; ++oc) bias_grad_[oc] += gm.row(oc).sum();
    MapMat dcolm(dcol.data(), fan_in, static_cast<Eigen::Index>(plane));
    dcolm.noalias() = wm.transpose() * gm;
    col2im_accumulate(dcol, in_ch_, x.h, x.w, dx.channel(b, 0));
  }
  return dx;
}

void Conv2d::collect_params(const std::string& prefix, std::vector<ParamRef>& out) {
  out.push_back({prefix + ".weight", &weight_, &weight_grad_, {out_ch_, in_ch_, kK, kK}, true});
  out.push_back({prefix + ".bias", &bias_, &bias_grad_, {out_ch_}, true});
}

void Conv2d::zero_grad() {
  std::fill(weight_grad_.begin(), weight_grad_.end(), 0.0);
  std::fill(bias_grad_.begin(), bias_grad_.end(), 0.0);
}

// ------------------------------------------------------------ BatchNorm2d

BatchNorm2d::BatchNorm2d(int channels) : ch_(channels) {
  gamma_.assign(ch_, 1.0);
  gamma_grad_.assign(ch_, 0.0);
  beta_.assign(ch_, 0.0);
  beta_grad_.assign(ch_, 0.0);
  running_mean_.assign(ch_, 0.0);
  running_var_.assign(ch_, 1.0);
}

Tensor BatchNorm2d::forward(const Tensor& x, bool training) {
  if (x.c != ch_) throw ShapeError("BatchNorm2d: channel mismatch");
  constexpr double kEps = 1e-5;
  constexpr double kMomentum = 0.1;
  const std::size_t plane = x.plane();
  const double m = static_cast<double>(x.n) * plane;
  Tensor out(x.n, x.c, x.h, x.w);
  trained_forward_ = training;

  if (training) {
    xhat_ = Tensor(x.n, x.c, x.h, x.w);
    inv_std_.assign(ch_, 0.0);
    for (int ic = 0; ic < ch_; ++ic) {
      double sum = 0.0, sq = 0.0;
      for (int b = 0; b < x.n; ++b) {
        const double* p = x.channel(b, ic);
        for (std::size_t i = 0; i < plane; ++i) {
          sum += p[i];
          sq += p[i] * p[i];
        }
      }
      const double mean = sum / m;
      const double var = sq / m - mean * mean;  // biased, used for normalization
      const double inv = 1.0 / std::sqrt(var + kEps);
      inv_std_[ic] = inv;
      for (int b = 0; b < x.n; ++b) {
        const double* p = x.channel(b, ic);
        double* xh = xhat_.channel(b, ic);
        double* o = out.channel(b, ic);
        for (std::size_t i = 0; i < plane; ++i) {
          xh[i] = (p[i] - mean) * inv;
          o[i] = gamma_[ic] * xh[i] + beta_[ic];
        }
      }
      const double unbiased = m > 1.0 ? var * m / (m - 1.0) : var;
      running_mean_[ic] = (1.0 - kMomentum) * running_mean_[ic] + kMomentum * mean;
      running_var_[ic] = (1.0 - kMomentum) * running_var_[ic] + kMomentum * unbiased;
    }
  } else {
    inv_std_.assign(ch_, 0.0);
    for (int ic = 0; ic < ch_; ++ic) {
      const double inv = 1.0 / std::sqrt(running_var_[ic] + kEps);
      inv_std_[ic] = inv;
      for (int b = 0; b < x.n; ++b) {
        const double* p = x.channel(b, ic);
        double* o = out.channel(b, ic);
        for (std::size_t i = 0; i < plane; ++i)
          o[i] = gamma_[ic] * (p[i] - running_mean_[ic]) * inv + beta_[ic];
      }
    }
  }
  return out;
}

Tensor BatchNorm2d::backward(const Tensor& grad_out) {
  const std::size_t plane = grad_out.plane();
  const double m = static_cast<double>(grad_out.n) * plane;
  Tensor dx(grad_out.n, grad_out.c, grad_out.h, grad_out.w);

  if (!trained_forward_) {
    // Evaluation-mode backward: a per-channel affine map.
    for (int ic = 0; ic < ch_; ++ic) {
      const double scale = gamma_[ic] * inv_std_[ic];
      for (int b = 0; b < grad_out.n; ++b) {
        const double* g = grad_out.channel(b, ic);
        double* d = dx.channel(b, ic);
        for (std::size_t i = 0; i < plane; ++i) d[i] = g[i] * scale;
      }
    }
    return dx;
  }

  for (int ic = 0; ic < ch_; ++ic) {
    double sum_g = 0.0, sum_gx = 0.0;
    for (int b = 0; b < grad_out.n; ++b) {
      const double* g = grad_out.channel(b, ic);
      const double* xh = xhat_.channel(b, ic);
      for (std::size_t i = 0; i < plane; ++i) {
        sum_g += g[i];
        sum_gx += g[i] * xh[i];
      }
    }
    gamma_grad_[ic] += sum_gx;
    beta_grad_[ic] += sum_g;
    const double scale = gamma_[ic] * inv_std_[ic] / m;
    for (int b = 0; b < grad_out.n; ++b) {
      const double* g = grad_out.channel(b, ic);
      const double* xh = xhat_.channel(b, ic);
      double* d = dx.channel(b, ic);
      for (std::size_t i = 0; i < plane; ++i)
        d[i] = scale * (m * g[i] - sum_g - xh[i] * sum_gx);
    }
  }
  return dx;
}

void BatchNorm2d::collect_params(const std::string& prefix, std::vector<ParamRef>& out) {
  out.push_back({prefix + ".gamma", &gamma_, &gamma_grad_, {ch_}, true});
  out.push_back({prefix + ".beta", &beta_, &beta_grad_, {ch_}, true});
  out.push_back({prefix + ".running_mean", &running_mean_, nullptr, {ch_}, false});
  out.push_back({prefix + ".running_var", &running_var_, nullptr, {ch_}, false});
}

void BatchNorm2d::zero_grad() {
  std::fill(gamma_grad_.begin(), gamma_grad_.end(), 0.0);
  std::fill(beta_grad_.begin(), beta_grad_.end(), 0.0);
}

// ----------------------------------------------------------------- ReLU

Tensor ReLU::forward(const Tensor& x, bool) {
  n_ = x.n; c_ = x.c; h_ = x.h; w_ = x.w;
  mask_.assign(x.size(), false);
  Tensor out(x.n, x.c, x.h, x.w);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.v[i] > 0.0) {
      out.v[i] = x.v[i];
      mask_[i] = true;
    }
  }
  return out;
}

Tensor ReLU::backward(const Tensor& grad_out) {
  Tensor dx(n_, c_, h_, w_);
  for (std::size_t i = 0; i < dx.size(); ++i) dx.v[i] = mask_[i] ? grad_out.v[i] : 0.0;
  return dx;
}

// --------------------------------------------------------------- Sigmoid

Tensor Sigmoid::forward(const Tensor& x, bool) {
  Tensor out(x.n, x.c, x.h, x.w);
  for (std::size_t i = 0; i < x.size(); ++i) out.v[i] = 1.0 / (1.0 + std::exp(-x.v[i]));
  output_ = out;
  return out;
}

Tensor Sigmoid::backward(const Tensor& grad_out) {
  Tensor dx(output_.n, output_.c, output_.h, output_.w);
  for (std::size_t i = 0; i < dx.size(); ++i) {
    const double y = output_.v[i];
    dx.v[i] = grad_out.v[i] * y * (1.0 - y);
  }
  return dx;
}

// -------------------------------------------------------------- MaxPool2

Tensor MaxPool2::forward(const Tensor& x, bool) {
  if (x.h % 2 != 0 || x.w % 2 != 0) throw ShapeError("MaxPool2: spatial size must be even");
  in_n_ = x.n; in_c_ = x.c; in_h_ = x.h; in_w_ = x.w;
  Tensor out(x.n, x.c, x.h / 2, x.w / 2);
  argmax_.assign(out.size(), 0);
  std::size_t oi = 0;
  for (int b = 0; b < x.n; ++b) {
    for (int ic = 0; ic < x.c; ++ic) {
      const double* p = x.channel(b, ic);
      const std::size_t base = (static_cast<std::size_t>(b) * x.c + ic) * x.plane();
      for (int y = 0; y < out.h; ++y) {
        for (int z = 0; z < out.w; ++z, ++oi) {
          std::size_t best = static_cast<std::size_t>(2 * y) * x.w + 2 * z;
          double best_v = p[best];
          const std::size_t cand[3] = {best + 1, best + x.w, best + x.w + 1};
          for (std::size_t k : cand) {
            if (p[k] > best_v) {
              best_v = p[k];
              best = k;
            }
          }
          out.v[oi] = best_v;
          argmax_[oi] = base + best;
        }
      }
    }
  }
  return out;
}

Tensor MaxPool2::backward(const Tensor& grad_out) {
  Tensor dx(in_n_, in_c_, in_h_, in_w_);
  for (std::size_t i = 0; i < grad_out.size(); ++i) dx.v[argmax_[i]] += grad_out.v[i];
  return dx;
}

// ------------------------------------------------------ UpsampleNearest2

Tensor UpsampleNearest2::forward(const Tensor& x, bool) {
  in_n_ = x.n; in_c_ = x.c; in_h_ = x.h; in_w_ = x.w;
  Tensor out(x.n, x.c, x.h * 2, x.w * 2);
  for (int b = 0; b < x.n; ++b) {
    for (int ic = 0; ic < x.c; ++ic) {
      const double* p = x.channel(b, ic);
      double* o = out.channel(b, ic);
      for (int y = 0; y < out.h; ++y) {
        const double* row = p + static_cast<std::size_t>(y / 2) * x.w;
        double* orow = o + static_cast<std::size_t>(y) * out.w;
        for (int z = 0; z < out.w; ++z) orow[z] = row[z / 2];
      }
    }
  }
  return out;
}

Tensor UpsampleNearest2::backward(const Tensor& grad_out) {
  Tensor dx(in_n_, in_c_, in_h_, in_w_);
  for (int b = 0; b < in_n_; ++b) {
    for (int ic = 0; ic < in_c_; ++ic) {
      const double* g = grad_out.channel(b, ic);
      double* d = dx.channel(b, ic);
      for (int y = 0; y < grad_out.h; ++y) {
        const double* grow = g + static_cast<std::size_t>(y) * grad_out.w;
        double* drow = d + static_cast<std::size_t>(y / 2) * in_w_;
        for (int z = 0; z < grad_out.w; ++z) drow[z / 2] += grow[z];
      }
    }
  }
  return dx;
}

// --------------------------------------------------------- PhysicalLayer

PhysicalLayer::PhysicalLayer(std::vector<double> weights, bool trainable)
    : weights_(std::move(weights)), trainable_(trainable) {
  grad_.assign(weights_.size(), 0.0);
}

Tensor PhysicalLayer::forward(const Tensor& x, bool) {
  if (x.c != static_cast<int>(weights_.size()))
    throw ShapeError("PhysicalLayer: datacube has " + std::to_string(x.c) + " channels, pattern has " +
                     std::to_string(weights_.size()) + " weights");
  input_ = x;
  Tensor out(x.n, 1, x.h, x.w);
  const std::size_t plane = x.plane();
  for (int b = 0; b < x.n; ++b) {
    double* o = out.channel(b, 0);
    for (int led = 0; led < x.c; ++led) {
      const double w = weights_[led];
      if (w == 0.0) continue;
      const double* p = x.channel(b, led);
      for (std::size_t i = 0; i < plane; ++i) o[i] += w * p[i];
    }
  }
  return out;
}

Tensor PhysicalLayer::backward(const Tensor& grad_out) {
  const Tensor& x = input_;
  const std::size_t plane = x.plane();
  for (int b = 0; b < x.n; ++b) {
    const double* g = grad_out.channel(b, 0);
    for (int led = 0; led < x.c; ++led) {
      const double* p = x.channel(b, led);
      double acc = 0.0;
      for (std::size_t i = 0; i < plane; ++i) acc += g[i] * p[i];
      grad_[led] += acc;
    }
  }
  return Tensor();  // the datacube is input data, not a differentiable node
}

void PhysicalLayer::collect_params(const std::string& prefix, std::vector<ParamRef>& out) {
  out.push_back({prefix + ".weights", &weights_, &grad_,
                 {static_cast<int>(weights_.size())}, trainable_});
}

void PhysicalLayer::zero_grad() { std::fill(grad_.begin(), grad_.end(), 0.0); }

// ------------------------------------------------------------ NoiseLayer

Tensor NoiseLayer::forward(const Tensor& x, bool training) {
  if (!training || !cfg_.enabled || cfg_.k == 0.0) return x;
  Tensor out(x.n, x.c, x.h, x.w);
  for (std::size_t i = 0; i < x.size(); ++i)
    out.v[i] = noisy_value(x.v[i], cfg_.k, cfg_.seed, step_, i);
  ++step_;
  return out;
}

// ---------------------------------------------------------------- concat

Tensor concat_channels(const Tensor& a, const Tensor& b) {
  if (a.n != b.n || a.h != b.h || a.w != b.w)
    throw ShapeError("concat_channels: spatial/batch shape mismatch");
  Tensor out(a.n, a.c + b.c, a.h, a.w);
  const std::size_t plane = a.plane();
  for (int ib = 0; ib < a.n; ++ib) {
    std::memcpy(out.channel(ib, 0), a.channel(ib, 0), a.c * plane * sizeof(double));
    std::memcpy(out.channel(ib, a.c), b.channel(ib, 0), b.c * plane * sizeof(double));
  }
  return out;
}

void split_channels(const Tensor& grad, int c_first, Tensor& grad_a, Tensor& grad_b) {
  grad_a = Tensor(grad.n, c_first, grad.h, grad.w);
  grad_b = Tensor(grad.n, grad.c - c_first, grad.h, grad.w);
  const std::size_t plane = grad.plane();
  for (int ib = 0; ib < grad.n; ++ib) {
    std::memcpy(grad_a.channel(ib, 0), grad.channel(ib, 0), c_first * plane * sizeof(double));
    std::memcpy(grad_b.channel(ib, 0), grad.channel(ib, c_first),
                (grad.c - c_first) * plane * sizeof(double));
  }
}

}  // namespace ledscope::nn
