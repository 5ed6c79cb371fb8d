// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ledscope/image.hpp"

namespace ledscope {

/// Forward 2-D DFT, unnormalized (FFTW convention).
ComplexImage fft2(const ComplexImage& in);

/// Inverse 2-D DFT, scaled by 1/(rows*cols) so ifft2(fft2(x)) == x.
ComplexImage ifft2(const ComplexImage& in);

/// Signed frequency index of FFT bin `i` on an axis of length `n`
/// (0, 1, ..., n/2-1, -n/2, ..., -1).
constexpr int fft_freq_index(int i, int n) { return i <= (n - 1) / 2 ? i : i - n; }

/// FFT bin holding signed frequency index `s` on an axis of length `n`.
constexpr int fft_bin_of(int s, int n) { return ((s % n) + n) % n; }

}  // namespace ledscope
