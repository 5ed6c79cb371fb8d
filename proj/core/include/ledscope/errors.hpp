// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ledscope {

/// Inconsistent or invalid configuration (bad geometry, missing wavelength
/// channel, indivisible grid sizes, malformed config files).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched array/image/tensor shapes between operands.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Phantom packing gave up before reaching the requested cell count.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, int achieved)
      : std::runtime_error(what), achieved_count(achieved) {}
  int achieved_count;
};

/// Non-finite loss during optimization; carries a diagnostic snapshot.
class TrainingDiverged : public std::runtime_error {
 public:
  TrainingDiverged(const std::string& what, int epoch, int step, double loss)
      : std::runtime_error(what), epoch(epoch), step(step), loss(loss) {}
  int epoch;
  int step;
  double loss;
};

}  // namespace ledscope
