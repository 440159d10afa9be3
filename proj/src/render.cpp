#include "specdyn/render.hpp"

#include <cstdio>
#include <ostream>
#include <thread>

#include "specdyn/level.hpp"
#include "specdyn/wreath.hpp"

namespace specdyn::render {

int verdict_code(dihedral::Verdict v) {
  switch (v) {
    case dihedral::Verdict::Resolvent: return 0;
    case dihedral::Verdict::SpectrumBand: return 1;
    case dihedral::Verdict::ExtendedIndeterminacy: return 2;
  }
  return 0;
}

int verdict_code(lamp::Verdict v) {
  switch (v) {
    case lamp::Verdict::NotDetected: return 0;
    case lamp::Verdict::CriticalVariety: return 1;
    case lamp::Verdict::Band: return 2;
    case lamp::Verdict::GammaCurve: return 3;
    case lamp::Verdict::HyperplaneL: return 4;
  }
  return 0;
}

const char* verdict_label(Group g, int code) {
  if (g == Group::Dihedral) {
    static const char* names[] = {"Resolvent", "SpectrumBand",
                                  "ExtendedIndeterminacy"};
    return (code >= 0 && code < 3) ? names[code] : "?";
  }
  static const char* names[] = {"NotDetected", "CriticalVariety", "Band",
                                "GammaCurve", "HyperplaneL"};
  return (code >= 0 && code < 5) ? names[code] : "?";
}

namespace {

struct PixelEval {
  int code;
  double scalar;
};

PixelEval eval_pixel(const Vec4c& z, const Options& opt,
                     const selfsim::WreathSpec* spec) {
  auto p = normalize(z);
  if (!p) return {0, 0.0};

  if (opt.channel == Channel::SigmaMin) {
    auto terms = (opt.group == Group::Dihedral)
                     ? selfsim::dihedral_pencil(p->coords)
                     : selfsim::lamplighter_pencil(p->coords);
    double sv = selfsim::min_singular(
        selfsim::pencil_matrix(*spec, terms, opt.level));
    int code;
    if (opt.group == Group::Dihedral)
      code = verdict_code(dihedral::classify(z, opt.dihedral_tol).verdict);
    else
      code = verdict_code(lamp::classify_full(z, opt.lamp_tol).verdict);
    return {code, sv};
  }

  if (opt.group == Group::Dihedral) {
    dihedral::Classification c = dihedral::classify(z, opt.dihedral_tol);
    return {verdict_code(c.verdict), c.margin};
  }
  lamp::Classification c = lamp::classify_full(z, opt.lamp_tol);
  double scalar = (opt.channel == Channel::Residual)
                      ? (c.verdict == lamp::Verdict::NotDetected ||
                                 c.verdict == lamp::Verdict::HyperplaneL
                             ? c.min_gamma_residual
                             : c.residual)
                      : c.residual;
  return {verdict_code(c.verdict), scalar};
}

}  // namespace

RenderOutput render(const PlaneSpec& plane, const Options& opt) {
  plane.validate();
  RenderOutput out;
  out.width = plane.width;
  out.height = plane.height;
  size_t total = static_cast<size_t>(plane.width) * plane.height;
  out.verdict.resize(total);
  out.scalar.resize(total);

  selfsim::WreathSpec spec = (opt.group == Group::Dihedral)
                                 ? selfsim::dihedral_spec()
                                 : selfsim::lamplighter_spec();

  int workers = std::max(1, opt.threads);
  auto run_rows = [&](int j_begin, int j_end) {
    for (int j = j_begin; j < j_end; ++j) {
      for (int i = 0; i < plane.width; ++i) {
        PixelEval e = eval_pixel(plane.point(i, j), opt, &spec);
        size_t idx = static_cast<size_t>(j) * plane.width + i;
        out.verdict[idx] = e.code;
        out.scalar[idx] = e.scalar;
      }
    }
  };

  if (workers == 1) {
    run_rows(0, plane.height);
  } else {
    // Leaf pixels are pure functions of (i, j); disjoint row blocks make the
    // buffer fill scheduling-independent.
    std::vector<std::thread> pool;
    int rows_per = (plane.height + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      int lo = w * rows_per;
      int hi = std::min(plane.height, lo + rows_per);
      if (lo >= hi) break;
      pool.emplace_back(run_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

std::string to_pgm(const RenderOutput& out) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : out.scalar)
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  std::string s = "P5\n" + std::to_string(out.width) + " " +
                  std::to_string(out.height) + "\n255\n";
  s.reserve(s.size() + out.scalar.size());
  for (double v : out.scalar) {
    unsigned char byte = 255;
    if (std::isfinite(v))
      byte = (hi > lo) ? static_cast<unsigned char>(
                             255.0 * (v - lo) / (hi - lo) + 0.5)
                       : 0;
    s.push_back(static_cast<char>(byte));
  }
  return s;
}

namespace {

struct Rgb {
  unsigned char r, g, b;
};

Rgb palette(Group group, int code) {
  if (group == Group::Dihedral) {
    static const Rgb p[] = {{40, 40, 40}, {255, 255, 255}, {220, 50, 47}};
    return (code >= 0 && code < 3) ? p[code] : Rgb{0, 0, 0};
  }
  static const Rgb p[] = {{40, 40, 40},
                          {203, 75, 22},
                          {255, 255, 255},
                          {38, 139, 210},
                          {133, 153, 0}};
  return (code >= 0 && code < 5) ? p[code] : Rgb{0, 0, 0};
}

}  // namespace

std::string to_ppm(const RenderOutput& out, Group group) {
  std::string s = "P6\n" + std::to_string(out.width) + " " +
                  std::to_string(out.height) + "\n255\n";
  s.reserve(s.size() + 3 * out.verdict.size());
  for (int code : out.verdict) {
    Rgb c = palette(group, code);
    s.push_back(static_cast<char>(c.r));
    s.push_back(static_cast<char>(c.g));
    s.push_back(static_cast<char>(c.b));
  }
  return s;
}

void write_render_csv(const RenderOutput& out, const PlaneSpec& plane,
                      std::ostream& os) {
  os << "s,t,verdict,scalar\n";
  char buf[128];
  for (int j = 0; j < out.height; ++j) {
    for (int i = 0; i < out.width; ++i) {
      size_t idx = static_cast<size_t>(j) * out.width + i;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%d,%.17g\n", plane.s_at(i),
                    plane.t_at(j), out.verdict[idx], out.scalar[idx]);
      os << buf;
    }
  }
}

}  // namespace specdyn::render
