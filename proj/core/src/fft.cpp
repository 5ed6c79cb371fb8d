// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace ledscope {
namespace {

// FFTW plan creation is not thread-safe; execution of an existing plan is.
// Plans use FFTW_ESTIMATE so plan selection (and thus rounding behavior) is
// reproducible from run to run.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

ComplexImage transform(const ComplexImage& in, int sign) {
  if (in.rows() == 0 || in.cols() == 0) throw ShapeError("fft2: empty input");
  ComplexImage out(in.rows(), in.cols());
  // std::complex<double> is layout-compatible with fftw_complex.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_2d(in.rows(), in.cols(), src, dst, sign,
                            FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

ComplexImage fft2(const ComplexImage& in) { return transform(in, FFTW_FORWARD); }

ComplexImage ifft2(const ComplexImage& in) {
  ComplexImage out = transform(in, FFTW_BACKWARD);
  const double scale = 1.0 / (static_cast<double>(in.rows()) * in.cols());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= scale;
  return out;
}

}  // namespace ledscope
