#pragma once

#include <stdexcept>

#include "specdyn/projective.hpp"

namespace specdyn {

/// A real 2-parameter affine slice z(s,t) = base + s dir_u + t dir_v of C^4,
/// sampled on a width x height grid of pixel centers.
struct PlaneSpec {
  Vec4c base = Vec4c::Zero();
  Vec4c dir_u = Vec4c::Zero();
  Vec4c dir_v = Vec4c::Zero();
  double s0 = -1.0, s1 = 1.0;
  double t0 = -1.0, t1 = 1.0;
  int width = 256, height = 256;

  void validate() const {
    if (dir_u.isZero(0.0) && dir_v.isZero(0.0))
      throw std::invalid_argument("plane directions are both zero");
    if (width < 1 || height < 1 || width > 16384 || height > 16384)
      throw std::invalid_argument("resolution out of range (1..16384)");
  }

  double s_at(int i) const { return s0 + (s1 - s0) * (i + 0.5) / width; }
  double t_at(int j) const { return t0 + (t1 - t0) * (j + 0.5) / height; }

  Vec4c point(int i, int j) const {
    return base + s_at(i) * dir_u + t_at(j) * dir_v;
  }
};

}  // namespace specdyn
