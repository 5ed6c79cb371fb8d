// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ledscope/nn/layers.hpp"

namespace ledscope::nn {

/// Adam with the community defaults (beta1 0.9, beta2 0.999, eps 1e-8).
/// Operates on trainable ParamRefs in registration order.
class Adam {
 public:
  explicit Adam(std::vector<ParamRef> params, double beta1 = 0.9, double beta2 = 0.999,
                double eps = 1e-8);

  void step(double lr);

 private:
  std::vector<ParamRef> params_;
  std::vector<std::vector<double>> m_, v_;
  double beta1_, beta2_, eps_;
  long t_ = 0;
};

}  // namespace ledscope::nn
