#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "specdyn/scaled.hpp"

namespace specdyn {

using Vec4c = Eigen::Vector4cd;

/// Pencil coefficients (z0, z1, z2, z3); all coordinates finite.
using PencilPoint = Vec4c;

inline constexpr double kEpsZero = 1e-300;   // max modulus below this: zero vector
inline constexpr double kEpsProjEqual = 1e-10;

/// Chart-normalized representative of a point of P^3.
/// coords[chart] == 1 exactly; chart is the lowest index among coordinates
/// of maximal modulus of the raw representative; all |coords[i]| <= 1 + 1e-12.
struct ProjPoint {
  Vec4c coords;
  int chart = 0;
};

/// Returns nullopt for the (numerical) zero vector.
inline std::optional<ProjPoint> normalize(const Vec4c& raw,
                                          double eps_zero = kEpsZero) {
  int chart = 0;
  double best = std::norm(raw[0]);
  for (int i = 1; i < 4; ++i) {
    double a = std::norm(raw[i]);
    if (a > best) {
      best = a;
      chart = i;
    }
  }
  if (!(std::sqrt(best) >= eps_zero)) return std::nullopt;
  ProjPoint p;
  p.chart = chart;
  Complex pivot = raw[chart];
  for (int i = 0; i < 4; ++i) p.coords[i] = raw[i] / pivot;
  p.coords[chart] = Complex(1.0, 0.0);
  return p;
}

/// Chordal Fubini-Study distance sqrt(1 - |<p,q>|^2 / (|p|^2 |q|^2)); in [0,1].
inline double proj_distance(const ProjPoint& p, const ProjPoint& q) {
  Complex inner = p.coords.dot(q.coords);  // conjugate-linear in p
  double np = p.coords.squaredNorm();
  double nq = q.coords.squaredNorm();
  double c = 1.0 - std::norm(inner) / (np * nq);
  return std::sqrt(std::max(c, 0.0));
}

inline bool proj_equal(const ProjPoint& p, const ProjPoint& q,
                       double eps = kEpsProjEqual) {
  return proj_distance(p, q) <= eps;
}

/// Degree-2 homogeneous self-map of P^3 as a 4 x 10 monomial coefficient
/// table.  Monomial order: (0,0),(0,1),(0,2),(0,3),(1,1),(1,2),(1,3),
/// (2,2),(2,3),(3,3).
struct HomogMap {
  Eigen::Matrix<Complex, 4, 10> coeff = Eigen::Matrix<Complex, 4, 10>::Zero();

  static constexpr int monomial_index(int i, int j) {
    // requires i <= j
    return i * 4 - i * (i - 1) / 2 + (j - i);
  }

  Complex& at(int component, int i, int j) {
    return coeff(component, monomial_index(i, j));
  }

  Vec4c lift(const Vec4c& z) const {
    Eigen::Matrix<Complex, 10, 1> m;
    m << z[0] * z[0], z[0] * z[1], z[0] * z[2], z[0] * z[3], z[1] * z[1],
        z[1] * z[2], z[1] * z[3], z[2] * z[2], z[2] * z[3], z[3] * z[3];
    return coeff * m;
  }
};

/// Evaluates the lift at the chart representative and renormalizes.
/// nullopt = indeterminacy point (image is the zero vector).
inline std::optional<ProjPoint> apply_homog(const HomogMap& m,
                                            const ProjPoint& p,
                                            double eps_zero = kEpsZero) {
  return normalize(m.lift(p.coords), eps_zero);
}

/// First n iterates of p.  Iteration stops at the first indeterminacy point;
/// that entry and all remaining ones are nullopt.
inline std::vector<std::optional<ProjPoint>> orbit(const HomogMap& m,
                                                   const ProjPoint& p, int n,
                                                   double eps_zero = kEpsZero) {
  std::vector<std::optional<ProjPoint>> out;
  out.reserve(static_cast<size_t>(std::max(n, 0)));
  std::optional<ProjPoint> cur = p;
  for (int k = 0; k < n; ++k) {
    if (cur) cur = apply_homog(m, *cur, eps_zero);
    out.push_back(cur);
  }
  return out;
}

/// A lift of a point of C^4 with magnitude tracking: value = v * exp(log_scale),
/// max |v[i]| == 1.  Degree-2 maps square the scale each step, so plain
/// doubles overflow after a handful of iterations.
struct ScaledLift {
  Vec4c v;
  double log_scale = 0.0;

  static std::optional<ScaledLift> of(const Vec4c& z) {
    double a = z.cwiseAbs().maxCoeff();
    if (!(a > 0.0)) return std::nullopt;
    return ScaledLift{z / a, std::log(a)};
  }
};

/// One application of a degree-2 homogeneous map to a scaled lift.
/// nullopt = the image is the zero vector (indeterminacy).
inline std::optional<ScaledLift> step(const HomogMap& m, const ScaledLift& s) {
  Vec4c w = m.lift(s.v);
  double a = w.cwiseAbs().maxCoeff();
  if (!(a > 0.0)) return std::nullopt;
  return ScaledLift{w / a, 2.0 * s.log_scale + std::log(a)};
}

/// sum_i weights[i] * lift_i as a ScaledValue.
inline ScaledValue weighted_sum(const ScaledLift& s, const Vec4c& weights) {
  Complex acc{0.0, 0.0};
  for (int i = 0; i < 4; ++i) acc += weights[i] * s.v[i];
  return ScaledValue(acc, s.log_scale);
}

}  // namespace specdyn
