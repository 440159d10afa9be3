#include "specdyn/lamplighter.hpp"

#include <cstdio>
#include <ostream>

namespace specdyn::lamp {

namespace {

ProjPoint normalized_or_throw(const PencilPoint& z, double eps_zero) {
  auto p = normalize(z, eps_zero);
  if (!p) throw std::invalid_argument("zero vector is not a projective point");
  return *p;
}

}  // namespace

Vec4c map_lift(const Vec4c& z) {
  Complex d = z[0] - z[1];
  Complex q = z[2] * z[3];
  return {z[0] * z[0] - z[1] * z[1] - 2.0 * q, 2.0 * q, z[2] * d, z[3] * d};
}

const HomogMap& homog_map() {
  static const HomogMap map = [] {
    HomogMap m;
    m.at(0, 0, 0) = 1.0;
    m.at(0, 1, 1) = -1.0;
    m.at(0, 2, 3) = -2.0;
    m.at(1, 2, 3) = 2.0;
    m.at(2, 0, 2) = 1.0;
    m.at(2, 1, 2) = -1.0;
    m.at(3, 0, 3) = 1.0;
    m.at(3, 1, 3) = -1.0;
    return m;
  }();
  return map;
}

std::optional<ProjPoint> q_map(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  Complex d = v[0] - v[1];
  Complex q = v[2] * v[3];
  if (q == Complex(0.0, 0.0))
    return normalize(Vec4c{v[0] + v[1], Complex(0.0, 0.0), v[2], v[3]},
                     tol.eps_zero);
  if (std::abs(d) < tol.eps_e) return std::nullopt;  // pole
  Complex w = 2.0 * q / d;
  return normalize(Vec4c{v[0] + v[1] - w, w, v[2], v[3]}, tol.eps_zero);
}

QnResult qn_delta(const PencilPoint& z, int n, const Tolerances& tol) {
  if (n < 0) throw std::invalid_argument("qn_delta: n must be >= 0");
  QnResult res;
  if (n == 0) {
    res.point = normalized_or_throw(z, tol.eps_zero);
    res.delta = z[0] - z[1];
    return res;
  }
  cheb::GRecurrence rec(z);
  for (int k = 0; k < n; ++k) {
    if (rec.residual() < tol.eps_gamma) {
      res.pole_step = k;
      return res;
    }
    rec.advance();
  }
  Complex s = z[0] + z[1];
  Complex dn = rec.delta();
  res.delta = dn;
  res.point = normalize(Vec4c{0.5 * (s + dn), 0.5 * (s - dn), z[2], z[3]},
                        tol.eps_zero);
  if (!res.point) res.pole_step = n;
  return res;
}

double gamma_residual(const PencilPoint& z, int n) {
  if (n < 0) throw std::invalid_argument("gamma_residual: n must be >= 0");
  auto p = normalize(z);
  if (!p) throw std::invalid_argument("zero vector is not a projective point");
  cheb::GRecurrence rec(p->coords);
  for (int k = 0; k < n; ++k) rec.advance();
  return rec.residual();
}

Classification classify_e(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;

  Classification out;
  double crit = std::abs((v[0] - v[1]) * v[1] - 2.0 * v[2] * v[3]);
  if (crit < tol.eps_e) {
    out.verdict = Verdict::CriticalVariety;
    out.residual = crit;
    return out;
  }

  Complex s = v[0] + v[1];
  Complex q = v[2] * v[3];
  if (q == Complex(0.0, 0.0)) {
    // Degenerate band edge: the x-family equation collapses to (z0+z1)^2 = 0.
    if (std::abs(s) < tol.eps_e) {
      out.verdict = Verdict::Band;
      out.residual = std::abs(s);
      return out;
    }
  } else {
    Complex tsq = s * s / (16.0 * q);
    out.tau_sq = tsq;
    bool on = std::abs(tsq.imag()) <= tol.eps_band &&
              tsq.real() >= -tol.eps_band && tsq.real() <= 1.0 + tol.eps_band;
    if (on) {
      out.verdict = Verdict::Band;
      out.residual = cheb::segment_distance(tsq, 0.0, 1.0);
      return out;
    }
  }

  cheb::GRecurrence rec(v);
  for (int k = 0; k <= tol.gamma_nmax; ++k) {
    double r = rec.residual();
    if (r < out.min_gamma_residual) out.min_gamma_residual = r;
    if (r < tol.eps_gamma) {
      out.verdict = Verdict::GammaCurve;
      out.gamma_index = k;
      out.residual = r;
      return out;
    }
    rec.advance();
  }
  out.verdict = Verdict::NotDetected;
  out.residual = out.min_gamma_residual;
  return out;
}

Classification classify_full(const PencilPoint& z, const Tolerances& tol) {
  Classification c = classify_e(z, tol);
  if (c.verdict == Verdict::NotDetected && in_hyperplane_l(z, tol)) {
    c.verdict = Verdict::HyperplaneL;
    ProjPoint p = normalized_or_throw(z, tol.eps_zero);
    const Vec4c& v = p.coords;
    c.residual = std::abs(v[0] + v[1] + 2.0 * v[2] + 2.0 * v[3]);
  }
  return c;
}

bool in_hyperplane_l(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  return std::abs(v[0] + v[1] + 2.0 * v[2] + 2.0 * v[3]) < tol.eps_e;
}

Complex ratio_limit(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  Complex sn = v[0] + v[1];
  Complex qn = v[2] * v[3];
  if (qn == Complex(0.0, 0.0)) {
    if (std::abs(sn) < tol.eps_e)
      throw cheb::BandError("ratio_limit: degenerate band point");
  } else {
    Complex tsq = sn * sn / (16.0 * qn);
    if (std::abs(tsq.imag()) <= tol.eps_band && tsq.real() >= -tol.eps_band &&
        tsq.real() <= 1.0 + tol.eps_band)
      throw cheb::BandError("ratio_limit: tau^2 lies on [0,1]");
  }
  // Dominant root of x^2 - (z0+z1) x + 4 z2 z3, from the caller's lift.
  Complex s = z[0] + z[1];
  Complex r = std::sqrt(s * s - 16.0 * z[2] * z[3]);
  Complex hi = 0.5 * (s + r);
  Complex lo = 0.5 * (s - r);
  return std::abs(hi) >= std::abs(lo) ? hi : lo;
}

bool spectrum_lower_member(const PencilPoint& z, const Tolerances& tol) {
  if (in_hyperplane_l(z, tol)) return true;
  return classify_e(z, tol).verdict != Verdict::NotDetected;
}

std::vector<ExploreRow> explore_conjecture(const PlaneSpec& plane, int level,
                                           const selfsim::WreathSpec& spec,
                                           const Tolerances& tol) {
  plane.validate();
  std::vector<ExploreRow> rows;
  rows.reserve(static_cast<size_t>(plane.width) * plane.height);
  for (int j = 0; j < plane.height; ++j) {
    for (int i = 0; i < plane.width; ++i) {
      ExploreRow row;
      row.s = plane.s_at(i);
      row.t = plane.t_at(j);
      row.z = plane.point(i, j);
      auto p = normalize(row.z, tol.eps_zero);
      if (!p) {
        row.sigma_min = 0.0;
        row.lower_member = false;
        row.verdict = Verdict::NotDetected;
        row.residual = 0.0;
        rows.push_back(row);
        continue;
      }
      row.sigma_min = selfsim::min_singular(
          selfsim::pencil_matrix(spec, selfsim::lamplighter_pencil(p->coords),
                                 level));
      row.lower_member = spectrum_lower_member(row.z, tol);
      Classification c = classify_full(row.z, tol);
      row.verdict = c.verdict;
      row.residual = c.residual;
      rows.push_back(row);
    }
  }
  return rows;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CriticalVariety: return "CriticalVariety";
    case Verdict::Band: return "Band";
    case Verdict::GammaCurve: return "GammaCurve";
    case Verdict::HyperplaneL: return "HyperplaneL";
    case Verdict::NotDetected: return "NotDetected";
  }
  return "?";
}

void write_explore_csv(const std::vector<ExploreRow>& rows, std::ostream& os) {
  os << "s,t,z0re,z0im,z1re,z1im,z2re,z2im,z3re,z3im,"
        "sigma_min,lower_member,verdict,residual\n";
  char buf[512];
  for (const ExploreRow& r : rows) {
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%d,%s,%.17g\n",
                  r.s, r.t, r.z[0].real(), r.z[0].imag(), r.z[1].real(),
                  r.z[1].imag(), r.z[2].real(), r.z[2].imag(), r.z[3].real(),
                  r.z[3].imag(), r.sigma_min, r.lower_member ? 1 : 0,
                  verdict_name(r.verdict), r.residual);
    os << buf;
  }
}

}  // namespace specdyn::lamp
