// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/phantom.hpp"

#include <cmath>
#include <string>

#include "ledscope/rng.hpp"

namespace ledscope {

namespace {

struct Cell {
  double cx, cy;       // center [px]
  double a, b;         // semi-axes [px], a >= b
  double cos_t, sin_t; // orientation
  double phase;        // peak phase delay [rad]
  double absorption;   // peak amplitude absorption
  double brightness;   // fluorescence intensity
};

/// Normalized elliptical radius: 1 on the cell boundary, 0 at the center.
double ellipse_rho(const Cell& cell, double x, double y) {
  double dx = x - cell.cx;
  double dy = y - cell.cy;
  double u = dx * cell.cos_t + dy * cell.sin_t;
  double v = -dx * cell.sin_t + dy * cell.cos_t;
  return std::sqrt((u / cell.a) * (u / cell.a) + (v / cell.b) * (v / cell.b));
}

/// Gaussian taper rescaled to hit exactly zero at rho = 1.
double taper(double rho) {
  constexpr double kSigma = 0.45;
  const double edge = std::exp(-1.0 / (2.0 * kSigma * kSigma));
  if (rho >= 1.0) return 0.0;
  return (std::exp(-rho * rho / (2.0 * kSigma * kSigma)) - edge) / (1.0 - edge);
}

}  // namespace

void PhantomParams::validate() const {
  if (cell_count_min < 0 || cell_count_max < cell_count_min)
    throw ConfigError("PhantomParams: cell count range is empty");
  if (cell_radius_min <= 0.0 || cell_radius_max < cell_radius_min)
    throw ConfigError("PhantomParams: cell radius range is empty");
  if (phase_max < phase_min || phase_min < 0.0)
    throw ConfigError("PhantomParams: phase range is empty or negative");
  if (absorption_min < 0.0 || absorption_max < absorption_min || absorption_max >= 1.0)
    throw ConfigError("PhantomParams: absorption range must lie in [0, 1)");
  if (membrane_band_px <= 0.0) throw ConfigError("PhantomParams: membrane band must be > 0");
  if (nucleus_fraction <= 0.0 || nucleus_fraction >= 1.0)
    throw ConfigError("PhantomParams: nucleus fraction must be in (0, 1)");
}

Specimen generate_phantom(const PhantomParams& params, int grid, double pixel_size,
                          const std::vector<double>& wavelengths) {
  params.validate();
  if (grid < 4) throw ConfigError("generate_phantom: grid too small");
  if (wavelengths.empty()) throw ConfigError("generate_phantom: no wavelength channels");

  Prng rng(params.seed, /*stream=*/0x7068616e746f6dULL);
  const int target = rng.uniform_int(params.cell_count_min, params.cell_count_max);

  // Rejection-pack the cells. Centers stay clear of the borders so periodic
  // transforms never wrap cell content.
  std::vector<Cell> cells;
  constexpr int kMaxAttemptsPerCell = 200;
  int attempts_left = kMaxAttemptsPerCell * (target > 0 ? target : 1);
  while (static_cast<int>(cells.size()) < target && attempts_left > 0) {
    --attempts_left;
    Cell cell;
    cell.a = rng.uniform(params.cell_radius_min, params.cell_radius_max);
    cell.b = cell.a * rng.uniform(0.6, 1.0);
    double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    cell.cos_t = std::cos(theta);
    cell.sin_t = std::sin(theta);
    double margin = cell.a + 2.0;
    if (2.0 * margin >= grid) continue;
    cell.cx = rng.uniform(margin, grid - margin);
    cell.cy = rng.uniform(margin, grid - margin);
    cell.phase = rng.uniform(params.phase_min, params.phase_max);
    cell.absorption = rng.uniform(params.absorption_min, params.absorption_max);
    cell.brightness = rng.uniform(0.6, 1.0);

    bool overlaps = false;
    for (const Cell& other : cells) {
      double d = std::hypot(cell.cx - other.cx, cell.cy - other.cy);
      if (d < cell.a + other.a + 1.0) {
        overlaps = true;
        break;
      }
    }
    if (!overlaps) cells.push_back(cell);
  }
  if (static_cast<int>(cells.size()) < target)
    throw GenerationError("generate_phantom: packed only " + std::to_string(cells.size()) +
                              " of " + std::to_string(target) + " cells on a " +
                              std::to_string(grid) + "px grid",
                          static_cast<int>(cells.size()));

  // Accumulate per-pixel phase, absorption and fluorescence. Cells do not
  // overlap, so at most one cell contributes to any pixel.
  Image phase(grid, grid), absorption(grid, grid), fluor(grid, grid);
  for (const Cell& cell : cells) {
    int r0 = std::max(0, static_cast<int>(std::floor(cell.cy - cell.a - 1)));
    int r1 = std::min(grid - 1, static_cast<int>(std::ceil(cell.cy + cell.a + 1)));
    int c0 = std::max(0, static_cast<int>(std::floor(cell.cx - cell.a - 1)));
    int c1 = std::min(grid - 1, static_cast<int>(std::ceil(cell.cx + cell.a + 1)));
    const double mean_radius = std::sqrt(cell.a * cell.b);
    const double band = params.membrane_band_px / mean_radius;  // in rho units
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        double rho = ellipse_rho(cell, c, r);
        if (rho >= 1.0) continue;
        double g = taper(rho);
        phase(r, c) += cell.phase * g;
        absorption(r, c) += cell.absorption * g;
        if (params.mode == PhantomMode::Nuclei) {
          if (rho <= params.nucleus_fraction) {
            double nr = rho / params.nucleus_fraction;
            fluor(r, c) = cell.brightness * (1.0 - 0.3 * nr * nr);
          }
        } else {
          // Compactly supported membrane band: nonzero only for
          // rho in [1 - band, 1).
          if (rho >= 1.0 - band) {
            double t = (rho - (1.0 - band)) / band;  // 0..1 across the band
            double bump = std::sin(3.14159265358979323846 * t);
            fluor(r, c) = cell.brightness * bump;
          }
        }
      }
    }
  }

  // Normalize fluorescence into [0, 1]; empty specimens stay all-zero.
  double peak = image_max(fluor);
  if (peak > 1.0)
    for (std::size_t i = 0; i < fluor.size(); ++i) fluor[i] /= peak;

  Specimen specimen;
  specimen.wavelengths = wavelengths;
  specimen.pixel_size = pixel_size;
  specimen.fluorescence = std::move(fluor);

  // Phase disperses as lambda_ref/lambda; absorption is flat across color.
  const double lambda_ref = wavelengths[wavelengths.size() / 2];
  specimen.transmittance.reserve(wavelengths.size());
  for (double wl : wavelengths) {
    ComplexImage t(grid, grid);
    const double dispersion = lambda_ref / wl;
    for (int r = 0; r < grid; ++r) {
      for (int c = 0; c < grid; ++c) {
        double amp = 1.0 - absorption(r, c);
        double ph = phase(r, c) * dispersion;
        t(r, c) = std::polar(amp, ph);
      }
    }
    specimen.transmittance.push_back(std::move(t));
  }
  return specimen;
}

}  // namespace ledscope
