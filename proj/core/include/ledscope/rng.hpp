// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ledscope {

// Counter-based randomness. Every draw is a pure function of a 64-bit key, so
// results are reproducible regardless of evaluation order and of the standard
// library's distribution internals.

/// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t key_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

constexpr std::uint64_t key_combine(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return key_combine(key_combine(a, b), c);
}

/// Uniform double in [0, 1) with a full 53-bit mantissa.
inline double key_uniform(std::uint64_t key) {
  return static_cast<double>(mix64(key) >> 11) * 0x1.0p-53;
}

/// Standard normal draw keyed by `key` (Box-Muller; one value per key).
inline double key_normal(std::uint64_t key) {
  // u1 in (0, 1] so the log never sees zero.
  double u1 = (static_cast<double>(mix64(key) >> 11) + 1.0) * 0x1.0p-53;
  double u2 = key_uniform(key_combine(key, 0x6e6f726d616c32ULL));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Sequential convenience wrapper over the counter-based core. Streams with
/// different (seed, stream) pairs are statistically independent.
class Prng {
 public:
  explicit Prng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(key_combine(seed, stream)) {}

  std::uint64_t next_u64() { return mix64(key_combine(base_, counter_++)); }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double normal() { return key_normal(key_combine(base_, counter_++)); }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace ledscope
