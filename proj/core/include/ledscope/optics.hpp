// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ledscope/image.hpp"
#include "ledscope/led_array.hpp"

namespace ledscope {

/// Ideal circular binary pupil: the frequency-space representation of the
/// coherent point-spread function. Unity inside the circle of radius NA/λ,
/// zero outside, no aberrations.
struct Pupil {
  double na = 0.0;

  /// Coherent cutoff NA/λ in cycles/meter.
  double cutoff_frequency(double wavelength) const { return na / wavelength; }

  void validate() const {
    if (na <= 0.0 || na > 1.0) throw ConfigError("Pupil: NA must be in (0, 1]");
  }
};

/// Binary pupil transfer mask on the FFT frequency grid of a square field
/// with `grid` pixels of size `pixel_size` [m]. Inclusive at the cutoff.
ComplexImage pupil_transfer(const Pupil& pupil, int grid, double pixel_size, double wavelength);

/// Complex transmittance per wavelength channel plus the co-registered
/// fluorescence ground truth.
struct Specimen {
  std::vector<double> wavelengths;            // channel wavelengths [m]
  std::vector<ComplexImage> transmittance;    // one field per channel, |t| <= 1
  double pixel_size = 0.0;                    // sample-plane pixel size [m]
  Image fluorescence;                         // in [0, 1], same grid

  /// Channel index for `wavelength`; configuration error when missing.
  int channel_of(double wavelength) const;
};

/// Per-LED intensity images of one field of view plus per-LED exposure
/// scale factors (all 1 unless configured otherwise).
struct ImageStack {
  std::vector<Image> images;
  std::vector<double> exposures;

  int count() const { return static_cast<int>(images.size()); }
};

enum class LedField { BrightField, DarkField };

/// BrightField iff sin(angle) <= NA (boundary inclusive).
LedField classify_led(const LedSpec& led, const Pupil& pupil);

/// Intensity image of the specimen under one LED's tilted plane wave:
/// |ifft(fft(o * exp(i k·r)) * pupil)|^2.
///
/// The transform uses periodic boundaries, so the tilt frequency is snapped
/// to the nearest lattice frequency of the grid; a plane wave is exactly
/// representable under periodic boundaries only at lattice frequencies.
Image coherent_image(const Specimen& specimen, const LedSpec& led, const Pupil& pupil);

/// One coherent image per LED, scaled by the per-LED exposure. An empty
/// `exposures` means all 1.
ImageStack simulate_stack(const Specimen& specimen, const LedArray& array, const Pupil& pupil,
                          const std::vector<double>& exposures = {});

/// Scale all images by 1/max so intensities lie in [0, 1] for the whole
/// stack; returns the scale factor applied (1 for an all-zero stack).
double normalize_stack(ImageStack& stack);

}  // namespace ledscope
