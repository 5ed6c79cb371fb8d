// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "ledscope/fft.hpp"
#include "ledscope/rng.hpp"

namespace ledscope {

// ------------------------------------------------------------- baselines

std::string BaselineKind::name() const {
  switch (kind) {
    case Center: return "center";
    case All: return "all";
    case DC: return "dc";
    case OffAxis: return "offaxis";
    case Random: return "random";
  }
  return "center";
}

BaselineKind BaselineKind::from_name(const std::string& name, std::uint64_t random_seed) {
  if (name == "center") return center();
  if (name == "all") return all();
  if (name == "dc") return dc();
  if (name == "offaxis") return off_axis();
  if (name == "random") return random(random_seed);
  throw std::invalid_argument("unknown baseline pattern: " + name);
}

IlluminationPattern standard_pattern(const BaselineKind& kind, const LedArray& array,
                                     const Pupil& pupil) {
  array.validate();
  IlluminationPattern pattern;
  pattern.name = kind.name();
  pattern.weights.assign(array.led_count(), 0.0);

  switch (kind.kind) {
    case BaselineKind::Center:
      for (int ch = 0; ch < array.channels(); ++ch)
        pattern.weights[array.index_of(array.center_row, array.center_col, ch)] = 1.0;
      break;
    case BaselineKind::All:
      std::fill(pattern.weights.begin(), pattern.weights.end(), 1.0);
      break;
    case BaselineKind::DC:
      for (int r = 0; r < array.rows; ++r) {
        for (int c = 0; c < array.cols; ++c) {
          if (c == array.center_col) continue;
          for (int ch = 0; ch < array.channels(); ++ch) {
            const int idx = array.index_of(r, c, ch);
            if (classify_led(led_spec(array, idx), pupil) != LedField::BrightField) continue;
            pattern.weights[idx] = c < array.center_col ? 1.0 : -1.0;
          }
        }
      }
      break;
    case BaselineKind::OffAxis: {
      // Grid position closest to a 4 mm lateral offset; ties resolve to the
      // lowest index.
      constexpr double kTargetOffset = 0.004;
      int best_row = array.center_row, best_col = array.center_col;
      double best_err = std::numeric_limits<double>::infinity();
      for (int r = 0; r < array.rows; ++r) {
        for (int c = 0; c < array.cols; ++c) {
          auto [x, y] = array.offset_of(r, c);
          double err = std::abs(std::hypot(x, y) - kTargetOffset);
          if (err < best_err - 1e-15) {
            best_err = err;
            best_row = r;
            best_col = c;
          }
        }
      }
      for (int ch = 0; ch < array.channels(); ++ch)
        pattern.weights[array.index_of(best_row, best_col, ch)] = 1.0;
      break;
    }
    case BaselineKind::Random: {
      Prng rng(kind.random_seed, 0x72616e64ULL);
      for (double& w : pattern.weights) w = rng.uniform();
      break;
    }
  }
  return pattern;
}

// --------------------------------------------------------------- metrics

double mse(const Image& a, const Image& b) {
  require_same_shape(a, b, "mse");
  if (a.size() == 0) throw std::invalid_argument("mse: empty images");
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    const double y = d * d - comp;
    const double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc / static_cast<double>(a.size());
}

namespace {

constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;

std::vector<double> ssim_gaussian_window() {
  std::vector<double> w(kSsimWindow);
  double total = 0.0;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double d = i - (kSsimWindow - 1) / 2.0;
    w[i] = std::exp(-d * d / (2.0 * kSsimSigma * kSsimSigma));
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

/// Separable filter, valid region only.
Image filter_valid(const Image& im, const std::vector<double>& k) {
  const int r = static_cast<int>(k.size());
  Image tmp(im.rows(), im.cols() - r + 1);
  for (int y = 0; y < im.rows(); ++y)
    for (int x = 0; x < tmp.cols(); ++x) {
      double acc = 0.0;
      for (int i = 0; i < r; ++i) acc += k[i] * im(y, x + i);
      tmp(y, x) = acc;
    }
  Image out(im.rows() - r + 1, tmp.cols());
  for (int y = 0; y < out.rows(); ++y)
    for (int x = 0; x < out.cols(); ++x) {
      double acc = 0.0;
      for (int i = 0; i < r; ++i) acc += k[i] * tmp(y + i, x);
      out(y, x) = acc;
    }
  return out;
}

Image elementwise_product(const Image& a, const Image& b) {
  Image out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

double ssim(const Image& a, const Image& b) {
  require_same_shape(a, b, "ssim");
  if (a.rows() < kSsimWindow || a.cols() < kSsimWindow)
    throw std::invalid_argument("ssim: image smaller than the 11x11 window");
  constexpr double kL = 1.0;
  constexpr double kC1 = (0.01 * kL) * (0.01 * kL);
  constexpr double kC2 = (0.03 * kL) * (0.03 * kL);

  const std::vector<double> win = ssim_gaussian_window();
  const Image mu_a = filter_valid(a, win);
  const Image mu_b = filter_valid(b, win);
  const Image aa = filter_valid(elementwise_product(a, a), win);
  const Image bb = filter_valid(elementwise_product(b, b), win);
  const Image ab = filter_valid(elementwise_product(a, b), win);

  double acc = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i], mb = mu_b[i];
    const double va = aa[i] - ma * ma;
    const double vb = bb[i] - mb * mb;
    const double cov = ab[i] - ma * mb;
    acc += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
           ((ma * ma + mb * mb + kC1) * (va + vb + kC2));
  }
  return acc / static_cast<double>(mu_a.size());
}

double relative_mse(const std::vector<double>& standard_mses, double learned_mse) {
  if (standard_mses.empty()) throw std::invalid_argument("relative_mse: no standard baselines");
  const double best_standard = *std::min_element(standard_mses.begin(), standard_mses.end());
  if (learned_mse == 0.0) return std::numeric_limits<double>::infinity();
  return best_standard / learned_mse;
}

// ------------------------------------------------- spectrum analysis

SpectrumProfile avg_spatial_freq_power(const std::vector<Image>& images, bool include_dc) {
  if (images.empty()) throw std::invalid_argument("avg_spatial_freq_power: empty image set");
  const int rows = images[0].rows();
  const int cols = images[0].cols();
  if (rows != cols) throw std::invalid_argument("avg_spatial_freq_power: images must be square");

  // Average power spectrum over the set.
  Image power(rows, cols);
  for (const Image& im : images) {
    if (im.rows() != rows || im.cols() != cols)
      throw ShapeError("avg_spatial_freq_power: images must share one size");
    ComplexImage field(rows, cols);
    for (std::size_t i = 0; i < im.size(); ++i) field[i] = im[i];
    ComplexImage spectrum = fft2(field);
    for (std::size_t i = 0; i < power.size(); ++i) power[i] += std::norm(spectrum[i]);
  }
  for (std::size_t i = 0; i < power.size(); ++i) power[i] /= static_cast<double>(images.size());

  // Integer-radius bins, no interpolation.
  const int max_radius = static_cast<int>(
      std::lround(std::hypot(static_cast<double>(rows / 2), static_cast<double>(cols / 2))));
  SpectrumProfile profile;
  profile.radial_power.assign(max_radius + 1, 0.0);
  for (int r = 0; r < rows; ++r) {
    const double fy = fft_freq_index(r, rows);
    for (int c = 0; c < cols; ++c) {
      const double fx = fft_freq_index(c, cols);
      const int bin = static_cast<int>(std::lround(std::hypot(fx, fy)));
      profile.radial_power[bin] += power(r, c);
    }
  }
  if (!include_dc) profile.radial_power[0] = 0.0;

  double total = 0.0, weighted = 0.0;
  for (std::size_t r = 0; r < profile.radial_power.size(); ++r) {
    total += profile.radial_power[r];
    weighted += static_cast<double>(r) * profile.radial_power[r];
  }
  profile.first_moment = total > 0.0 ? weighted / total : 0.0;
  return profile;
}

// ------------------------------------------------------------ EvalReport

std::vector<PatternDepthSummary> EvalReport::summarize() const {
  std::map<std::pair<std::string, int>, std::vector<const EvalRow*>> groups;
  for (const EvalRow& row : rows) groups[{row.pattern, row.bits}].push_back(&row);

  std::vector<PatternDepthSummary> out;
  for (const auto& [key, members] : groups) {
    PatternDepthSummary s;
    s.pattern = key.first;
    s.bits = key.second;
    s.seeds = static_cast<int>(members.size());
    for (const EvalRow* r : members) {
      s.mse_mean += r->mse;
      s.ssim_mean += r->ssim;
    }
    s.mse_mean /= s.seeds;
    s.ssim_mean /= s.seeds;
    for (const EvalRow* r : members) {
      s.mse_std += (r->mse - s.mse_mean) * (r->mse - s.mse_mean);
      s.ssim_std += (r->ssim - s.ssim_mean) * (r->ssim - s.ssim_mean);
    }
    if (s.seeds > 1) {
      s.mse_std = std::sqrt(s.mse_std / (s.seeds - 1));
      s.ssim_std = std::sqrt(s.ssim_std / (s.seeds - 1));
    } else {
      s.mse_std = s.ssim_std = 0.0;
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::pair<int, double>> EvalReport::relative_mse_per_depth() const {
  std::map<int, double> learned;
  std::map<int, std::vector<double>> standards;
  for (const PatternDepthSummary& s : summarize()) {
    if (s.pattern == "learned")
      learned[s.bits] = s.mse_mean;
    else
      standards[s.bits].push_back(s.mse_mean);
  }
  std::vector<std::pair<int, double>> out;
  for (const auto& [bits, mse_mean] : learned) {
    auto it = standards.find(bits);
    if (it == standards.end()) continue;
    out.emplace_back(bits, relative_mse(it->second, mse_mean));
  }
  return out;
}

void write_report_rows(const std::filesystem::path& file, const std::vector<EvalRow>& rows) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.precision(17);
  out << "pattern,bits,seed,mse,ssim,cell_key\n";
  for (const EvalRow& r : rows)
    out << r.pattern << "," << r.bits << "," << r.seed << "," << r.mse << "," << r.ssim << ","
        << r.cell_key << "\n";
}

std::vector<EvalRow> read_report_rows(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::string line;
  std::getline(in, line);
  std::vector<EvalRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream src(line);
    EvalRow row;
    std::string field;
    std::getline(src, row.pattern, ',');
    std::getline(src, field, ',');
    row.bits = std::stoi(field);
    std::getline(src, field, ',');
    row.seed = std::stoull(field);
    std::getline(src, field, ',');
    row.mse = std::stod(field);
    std::getline(src, field, ',');
    row.ssim = std::stod(field);
    std::getline(src, row.cell_key, ',');
    rows.push_back(row);
  }
  return rows;
}

void write_report_summary(const std::filesystem::path& file, const EvalReport& report) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.precision(17);
  out << "pattern,bits,seeds,mse_mean,mse_std,ssim_mean,ssim_std\n";
  for (const PatternDepthSummary& s : report.summarize())
    out << s.pattern << "," << s.bits << "," << s.seeds << "," << s.mse_mean << "," << s.mse_std
        << "," << s.ssim_mean << "," << s.ssim_std << "\n";
  out << "\nbits,r_mse\n";
  for (const auto& [bits, r] : report.relative_mse_per_depth()) {
    out << bits << ",";
    if (std::isinf(r))
      out << "inf\n";  // zero learned MSE flagged as an infinite ratio
    else
      out << r << "\n";
  }
}

}  // namespace ledscope
