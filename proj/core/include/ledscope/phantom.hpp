// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ledscope/optics.hpp"

namespace ledscope {

enum class PhantomMode { Nuclei, Membrane };

/// Synthetic-cell generator settings. Cells are non-overlapping random
/// ellipses with Gaussian-tapered phase and absorption; fluorescence is a
/// nucleus disk or a thin membrane band, registered to the same grid.
struct PhantomParams {
  PhantomMode mode = PhantomMode::Membrane;
  int cell_count_min = 2;
  int cell_count_max = 5;
  double cell_radius_min = 5.0;   // major semi-axis [px]
  double cell_radius_max = 10.0;  // major semi-axis [px]
  double phase_min = 0.3;         // peak phase delay [rad]
  double phase_max = 1.5;
  double absorption_min = 0.02;   // peak amplitude absorption, in [0, 1)
  double absorption_max = 0.15;
  double membrane_band_px = 2.0;  // radial band thickness (Membrane mode)
  double nucleus_fraction = 0.45; // nucleus radius as a fraction of the cell
  std::uint64_t seed = 0;

  void validate() const;
};

/// Deterministic synthetic specimen on a square `grid` with transmittance
/// channels at `wavelengths`. Phase disperses as lambda_ref/lambda across
/// channels so color carries contrast.
Specimen generate_phantom(const PhantomParams& params, int grid, double pixel_size,
                          const std::vector<double>& wavelengths);

}  // namespace ledscope
