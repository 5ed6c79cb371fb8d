// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/optics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ledscope/fft.hpp"

namespace ledscope {

ComplexImage pupil_transfer(const Pupil& pupil, int grid, double pixel_size, double wavelength) {
  pupil.validate();
  if (grid < 1) throw ConfigError("pupil_transfer: grid must be >= 1");
  if (pixel_size <= 0.0) throw ConfigError("pupil_transfer: pixel size must be > 0");
  ComplexImage mask(grid, grid);
  const double df = 1.0 / (grid * pixel_size);  // frequency step [cycles/m]
  const double cutoff2 = pupil.cutoff_frequency(wavelength) * pupil.cutoff_frequency(wavelength);
  for (int r = 0; r < grid; ++r) {
    double fy = fft_freq_index(r, grid) * df;
    for (int c = 0; c < grid; ++c) {
      double fx = fft_freq_index(c, grid) * df;
      mask(r, c) = (fx * fx + fy * fy <= cutoff2) ? 1.0 : 0.0;
    }
  }
  return mask;
}

int Specimen::channel_of(double wavelength) const {
  for (std::size_t i = 0; i < wavelengths.size(); ++i) {
    if (std::abs(wavelengths[i] - wavelength) <= 1e-9 * wavelength) return static_cast<int>(i);
  }
  throw ConfigError("Specimen: no transmittance channel at wavelength " +
                    std::to_string(wavelength * 1e9) + " nm");
}

LedField classify_led(const LedSpec& led, const Pupil& pupil) {
  return std::sin(led.angle) <= pupil.na ? LedField::BrightField : LedField::DarkField;
}

Image coherent_image(const Specimen& specimen, const LedSpec& led, const Pupil& pupil) {
  const int channel = specimen.channel_of(led.wavelength);
  const ComplexImage& trans = specimen.transmittance[channel];
  if (trans.rows() != trans.cols()) throw ShapeError("coherent_image: grid must be square");
  const int grid = trans.rows();

  // Tilt frequency in integer cycles across the field, snapped to the FFT
  // lattice. Axis convention: x runs along columns, y along rows.
  const double field = grid * specimen.pixel_size;
  const auto [kx, ky] = led.transverse_wavevector;
  const long sx = std::lround(kx / (2.0 * std::numbers::pi) * field);
  const long sy = std::lround(ky / (2.0 * std::numbers::pi) * field);

  ComplexImage tilted(grid, grid);
  const double phase_step = 2.0 * std::numbers::pi / grid;
  for (int r = 0; r < grid; ++r) {
    for (int c = 0; c < grid; ++c) {
      double phase = phase_step * (static_cast<double>(sx) * c + static_cast<double>(sy) * r);
      tilted(r, c) = trans(r, c) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }

  ComplexImage spectrum = fft2(tilted);
  ComplexImage mask = pupil_transfer(pupil, grid, specimen.pixel_size, led.wavelength);
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= mask[i];
  ComplexImage fieldout = ifft2(spectrum);

  Image intensity(grid, grid);
  for (std::size_t i = 0; i < intensity.size(); ++i) intensity[i] = std::norm(fieldout[i]);
  return intensity;
}

ImageStack simulate_stack(const Specimen& specimen, const LedArray& array, const Pupil& pupil,
                          const std::vector<double>& exposures) {
  array.validate();
  const int n = array.led_count();
  if (!exposures.empty() && static_cast<int>(exposures.size()) != n)
    throw ShapeError("simulate_stack: exposures length does not match LED count");
  for (double e : exposures)
    if (e <= 0.0) throw std::invalid_argument("simulate_stack: exposures must be > 0");

  ImageStack stack;
  stack.images.reserve(n);
  stack.exposures = exposures.empty() ? std::vector<double>(n, 1.0) : exposures;
  // Each LED image is a pure function of immutable inputs; the loop order
  // carries no state.
  for (int i = 0; i < n; ++i) {
    Image im = coherent_image(specimen, led_spec(array, i), pupil);
    if (stack.exposures[i] != 1.0)
      for (std::size_t p = 0; p < im.size(); ++p) im[p] *= stack.exposures[i];
    stack.images.push_back(std::move(im));
  }
  return stack;
}

double normalize_stack(ImageStack& stack) {
  double peak = 0.0;
  for (const Image& im : stack.images) peak = std::max(peak, image_max(im));
  if (peak <= 0.0) return 1.0;
  const double scale = 1.0 / peak;
  for (Image& im : stack.images)
    for (std::size_t i = 0; i < im.size(); ++i) im[i] *= scale;
  return scale;
}

}  // namespace ledscope
