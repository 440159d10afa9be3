#pragma once

#include <optional>

#include "specdyn/cheb.hpp"
#include "specdyn/projective.hpp"

namespace specdyn::dihedral {

struct Tolerances {
  double eps_e = 1e-10;       // membership in the extended indeterminacy set
  double eps_band = 1e-9;     // proximity of tau to [-1,1]
  double eps_branch = 1e-12;  // |z1 z2 - z0 z3| below this: degenerate branch
  double eps_zero = kEpsZero;
};

/// The quadratic lift F(z) = (z0^2-z1^2, z0 z2 - z1 z3, z0 z2 - z1 z3, z2^2-z3^2).
Vec4c map_lift(const Vec4c& z);

/// F as a monomial coefficient table (for orbits and generic map plumbing).
const HomogMap& homog_map();

enum class Verdict { Resolvent, SpectrumBand, ExtendedIndeterminacy };

struct TauResult {
  enum class Kind { Finite, Infinite, UndefinedOnE } kind;
  Complex value{0.0, 0.0};  // meaningful only when Finite
  bool finite() const { return kind == Kind::Finite; }
};

/// tau(z) = (z0^2 + z3^2 - z1^2 - z2^2) / (2 (z1 z2 - z0 z3)), the scalar
/// semi-conjugacy: tau(F z) = 2 tau(z)^2 - 1.  UndefinedOnE on the extended
/// indeterminacy set; Infinite when only the denominator vanishes.
TauResult tau(const PencilPoint& z, const Tolerances& tol = {});

struct Classification {
  Verdict verdict;
  TauResult tau;
  double margin;  // distance of tau to [-1,1], or joint quadric residual on E
};

/// SpectrumBand iff tau lies within eps_band of [-1,1];
/// ExtendedIndeterminacy iff both quadric residuals |z0 z3 - z1 z2| and
/// |z0^2+z3^2-z1^2-z2^2| fall below eps_e on the normalized representative;
/// Resolvent otherwise (including tau = infinity).
Classification classify(const PencilPoint& z, const Tolerances& tol = {});

enum class ELevel { I1, I2Only, NotInE };

/// Which zeta-family of the extended indeterminacy set the point belongs to:
/// I1 for [1:1:c:c] or [1:-1:c:-c]; I2Only for [1:c:1:c] or [1:c:-1:-c]
/// that are not already in I1.
ELevel indeterminacy_level(const PencilPoint& z, const Tolerances& tol = {});

/// Closed-form n-th iterate of F (n >= 2), scale-tracked.  Projectively
/// equal to orbit iteration; nullopt when the iterate is indeterminate.
std::optional<ProjPoint> fn_closed(const PencilPoint& z, int n,
                                   const Tolerances& tol = {});

/// Partial sum f_n with tau(z) = t:
///   sum_{k=1}^{n+1} 1 / (2^k prod_{j<k} T^j(t)).
/// strict mode rejects tau on [-1,1], where the sequence does not converge.
Complex f_partial(const PencilPoint& z, int n, bool strict = true,
                  const Tolerances& tol = {});

/// Series value on the same tau grid, usable when tau is known directly.
Complex f_series(Complex tau_value, int n);

/// Limit of f_n off the band: the candidate of tau -+ i sqrt(1 - tau^2)
/// closer to f_partial(z, 60).  The square-root branch is not pinned a
/// priori; the series is the ground truth.
Complex f_limit(const PencilPoint& z, const Tolerances& tol = {});

/// Determinant of the 2x2 left-regular symbol:
/// z0^2 + z3^2 - z1^2 - z2^2 + 2 cos(theta) (z0 z3 - z1 z2).
/// Vanishes for some theta iff z lies in the projective spectrum.
Complex left_regular_symbol(const PencilPoint& z, double theta);

}  // namespace specdyn::dihedral
