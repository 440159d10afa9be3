#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "specdyn/dihedral.hpp"
#include "specdyn/lamplighter.hpp"
#include "specdyn/plane.hpp"

namespace specdyn::render {

enum class Group { Dihedral, Lamplighter };
enum class Channel { Margin, Residual, SigmaMin };

/// Per-pixel verdict codes plus one scalar channel, row-major, row 0 at t0.
/// A pure function of the plane and tolerances; identical for any worker
/// count.
struct RenderOutput {
  int width = 0, height = 0;
  std::vector<int> verdict;     // group-specific codes, see palette()
  std::vector<double> scalar;   // margin / residual / sigma_min
};

struct Options {
  Group group = Group::Dihedral;
  Channel channel = Channel::Margin;
  int threads = 1;
  int level = 3;  // pencil level for Channel::SigmaMin
  dihedral::Tolerances dihedral_tol{};
  lamp::Tolerances lamp_tol{};
};

/// Verdict codes: dihedral 0=Resolvent 1=SpectrumBand 2=ExtendedIndeterminacy;
/// lamplighter 0=NotDetected 1=CriticalVariety 2=Band 3=GammaCurve
/// 4=HyperplaneL.
int verdict_code(dihedral::Verdict v);
int verdict_code(lamp::Verdict v);
const char* verdict_label(Group g, int code);

RenderOutput render(const PlaneSpec& plane, const Options& opt);

/// P5, maxval 255, scalar channel min-max scaled over finite values;
/// non-finite pixels map to 255.
std::string to_pgm(const RenderOutput& out);

/// P6 with the fixed verdict palette documented in the README.
std::string to_ppm(const RenderOutput& out, Group group);

/// Full-precision CSV: s,t,verdict,scalar.
void write_render_csv(const RenderOutput& out, const PlaneSpec& plane,
                      std::ostream& os);

}  // namespace specdyn::render
