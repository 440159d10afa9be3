#pragma once

#include <cstdint>
#include <random>

#include "specdyn/projective.hpp"

namespace specdyn {

/// Deterministic generator for the verification suites: std::mt19937_64
/// with uniforms built from the top 53 bits, so a seed produces the same
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  Complex complex_box(double r = 1.0) {
    double re = uniform(-r, r);
    double im = uniform(-r, r);
    return {re, im};
  }

  Complex nonzero_complex(double r = 1.0, double min_abs = 1e-3) {
    for (;;) {
      Complex c = complex_box(r);
      if (std::abs(c) >= min_abs) return c;
    }
  }

  Vec4c vec4(double r = 1.0) {
    Vec4c v;
    for (int i = 0; i < 4; ++i) v[i] = complex_box(r);
    return v;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace specdyn
