#pragma once

#include <iosfwd>
#include <optional>

#include "specdyn/cheb.hpp"
#include "specdyn/level.hpp"
#include "specdyn/plane.hpp"
#include "specdyn/projective.hpp"

namespace specdyn::lamp {

struct Tolerances {
  double eps_e = 1e-10;     // residual thresholds on the normalized representative
  double eps_band = 1e-9;   // proximity of tau^2 to [0,1]
  double eps_gamma = 1e-8;  // scale-free Gamma_n residual threshold
  int gamma_nmax = 200;     // Gamma sweep depth
  double eps_zero = kEpsZero;
};

/// F(z) = (z0^2 - z1^2 - 2 z2 z3, 2 z2 z3, z2 (z0 - z1), z3 (z0 - z1)).
Vec4c map_lift(const Vec4c& z);

const HomogMap& homog_map();

/// Q(z) = [z0 + z1 - 2 z2 z3/(z0-z1) : 2 z2 z3/(z0-z1) : z2 : z3],
/// the rational form of F (F z = (z0 - z1) * lift(Q z) componentwise).
/// nullopt = pole (z0 = z1 with z2 z3 != 0) or indeterminate image.
std::optional<ProjPoint> q_map(const PencilPoint& z, const Tolerances& tol = {});

struct QnResult {
  std::optional<ProjPoint> point;  // nullopt on a pole
  int pole_step = -1;              // first k with delta_k below threshold
  Complex delta{0.0, 0.0};         // delta_n = G_n / G_{n-1} of the input lift
};

/// n-th iterate of Q through the scalar recursion
///   delta_{k+1} = (z0+z1) - 4 z2 z3 / delta_k,  delta_0 = z0 - z1,
/// with delta_k = G_k/G_{k-1} carried as scaled pairs, reconstructing
/// Q^n z = [(s + delta_n)/2 : (s - delta_n)/2 : z2 : z3].
QnResult qn_delta(const PencilPoint& z, int n, const Tolerances& tol = {});

/// Scale-free residual of G_n at z; zero iff z lies on Gamma_n.
double gamma_residual(const PencilPoint& z, int n);

enum class Verdict { CriticalVariety, Band, GammaCurve, HyperplaneL, NotDetected };

struct Classification {
  Verdict verdict = Verdict::NotDetected;
  double residual = 0.0;               // residual of the matched component
  int gamma_index = -1;                // for GammaCurve: smallest index found
  std::optional<Complex> tau_sq;       // (z0+z1)^2 / (16 z2 z3) when defined
  double min_gamma_residual =
      std::numeric_limits<double>::infinity();  // smallest residual seen in sweep
};

/// Membership test for the extended indeterminacy set: critical variety
/// (z0-z1) z1 = 2 z2 z3, then the band tau^2 in [0,1] (with the degenerate
/// edge z2 z3 = 0, z0 + z1 = 0), then the Gamma_n sweep up to gamma_nmax.
/// NotDetected is one-sided: E is a closure and no finite sweep is complete.
/// Never returns HyperplaneL (L is not part of E); see classify_full.
Classification classify_e(const PencilPoint& z, const Tolerances& tol = {});

/// classify_e overlaid with the hyperplane L for reporting/rendering:
/// NotDetected points on L come back as HyperplaneL.
Classification classify_full(const PencilPoint& z, const Tolerances& tol = {});

/// z0 + z1 + 2 z2 + 2 z3 = 0 on the normalized representative.
bool in_hyperplane_l(const PencilPoint& z, const Tolerances& tol = {});

/// Normal limit of G_{n+1}/G_n off the band:
/// (z0 + z1 + sqrt((z0+z1)^2 - 16 z2 z3)) / 2, the dominant characteristic
/// root.  BandError when tau^2 lies within eps_band of [0,1].
Complex ratio_limit(const PencilPoint& z, const Tolerances& tol = {});

/// Certified member of the projective spectrum: on L or detected in E.
bool spectrum_lower_member(const PencilPoint& z, const Tolerances& tol = {});

struct ExploreRow {
  double s, t;
  Vec4c z;
  double sigma_min;
  bool lower_member;
  Verdict verdict;
  double residual;
};

/// Grid exploration of the conjectured equality between phi(L) u J(Q) and the
/// projective spectrum: smallest singular value of the level-n pencil next to
/// the certified classifier, row per pixel.  Reporting only; asserts nothing.
std::vector<ExploreRow> explore_conjecture(const PlaneSpec& plane, int level,
                                           const selfsim::WreathSpec& spec,
                                           const Tolerances& tol = {});

/// CSV with header s,t,z0re,...,z3im,sigma_min,lower_member,verdict,residual.
void write_explore_csv(const std::vector<ExploreRow>& rows, std::ostream& os);

const char* verdict_name(Verdict v);

}  // namespace specdyn::lamp
