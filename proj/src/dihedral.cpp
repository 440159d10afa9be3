#include "specdyn/dihedral.hpp"

#include <stdexcept>

namespace specdyn::dihedral {

namespace {

ProjPoint normalized_or_throw(const PencilPoint& z, double eps_zero) {
  auto p = normalize(z, eps_zero);
  if (!p) throw std::invalid_argument("zero vector is not a projective point");
  return *p;
}

}  // namespace

Vec4c map_lift(const Vec4c& z) {
  Complex mid = z[0] * z[2] - z[1] * z[3];
  return {z[0] * z[0] - z[1] * z[1], mid, mid, z[2] * z[2] - z[3] * z[3]};
}

const HomogMap& homog_map() {
  static const HomogMap map = [] {
    HomogMap m;
    m.at(0, 0, 0) = 1.0;
    m.at(0, 1, 1) = -1.0;
    m.at(1, 0, 2) = 1.0;
    m.at(1, 1, 3) = -1.0;
    m.at(2, 0, 2) = 1.0;
    m.at(2, 1, 3) = -1.0;
    m.at(3, 2, 2) = 1.0;
    m.at(3, 3, 3) = -1.0;
    return m;
  }();
  return map;
}

TauResult tau(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  Complex q1 = v[0] * v[3] - v[1] * v[2];                          // z0 z3 - z1 z2
  Complex q2 = v[0] * v[0] + v[3] * v[3] - v[1] * v[1] - v[2] * v[2];
  if (std::abs(q1) < tol.eps_e && std::abs(q2) < tol.eps_e)
    return {TauResult::Kind::UndefinedOnE};
  if (q1 == Complex(0.0, 0.0)) return {TauResult::Kind::Infinite};
  return {TauResult::Kind::Finite, q2 / (-2.0 * q1)};
}

Classification classify(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  Complex q1 = v[0] * v[3] - v[1] * v[2];
  Complex q2 = v[0] * v[0] + v[3] * v[3] - v[1] * v[1] - v[2] * v[2];
  double r1 = std::abs(q1), r2 = std::abs(q2);
  if (r1 < tol.eps_e && r2 < tol.eps_e)
    return {Verdict::ExtendedIndeterminacy,
            {TauResult::Kind::UndefinedOnE},
            std::max(r1, r2)};
  if (q1 == Complex(0.0, 0.0))
    return {Verdict::Resolvent,
            {TauResult::Kind::Infinite},
            std::numeric_limits<double>::infinity()};
  Complex t = q2 / (-2.0 * q1);
  double margin = cheb::band_distance(t);
  bool on = std::abs(t.imag()) <= tol.eps_band &&
            t.real() >= -1.0 - tol.eps_band && t.real() <= 1.0 + tol.eps_band;
  return {on ? Verdict::SpectrumBand : Verdict::Resolvent,
          {TauResult::Kind::Finite, t},
          margin};
}

ELevel indeterminacy_level(const PencilPoint& z, const Tolerances& tol) {
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  auto fam = [&](Complex a, Complex b) { return std::max(std::abs(a), std::abs(b)); };
  double f1 = fam(v[0] - v[1], v[2] - v[3]);  // [1:1:c:c]
  double f2 = fam(v[0] + v[1], v[2] + v[3]);  // [1:-1:c:-c]
  double f3 = fam(v[0] - v[2], v[1] - v[3]);  // [1:c:1:c]
  double f4 = fam(v[0] + v[2], v[1] + v[3]);  // [1:c:-1:-c]
  if (std::min(f1, f2) < tol.eps_e) return ELevel::I1;
  if (std::min(f3, f4) < tol.eps_e) return ELevel::I2Only;
  return ELevel::NotInE;
}

std::optional<ProjPoint> fn_closed(const PencilPoint& z, int n,
                                   const Tolerances& tol) {
  if (n < 2) throw std::invalid_argument("fn_closed: n must be >= 2");
  ProjPoint p = normalized_or_throw(z, tol.eps_zero);
  const Vec4c& v = p.coords;
  Complex d = v[1] * v[2] - v[0] * v[3];

  if (std::abs(d) <= tol.eps_branch) {
    // On z1 z2 = z0 z3 the iterate is F(z) times a power of
    // w = z0^2 - z1^2 + z3^2 - z2^2; w == 0 is exactly the indeterminacy set.
    Complex w =
        v[0] * v[0] - v[1] * v[1] + v[3] * v[3] - v[2] * v[2];
    if (std::abs(w) < tol.eps_e) return std::nullopt;
    return normalize(map_lift(v), tol.eps_zero);
  }

  // Generic branch: projectively
  //   [ u A - S : u B : u B : u C + S ],
  // u = 2^{m+1} prod_{k=0}^{m} T^k(tau), S = sum of the tail products
  // 2^{m+1-k} prod_{j=k}^{m} T^j(tau) for k = 1..m+1, A,B,C the quadratics
  // over d.  Tail form keeps everything polynomial in the T-iterates.
  const int m = n - 2;
  Complex t0 = (v[0] * v[0] + v[3] * v[3] - v[1] * v[1] - v[2] * v[2]) /
               (2.0 * d);
  std::vector<ScaledValue> titer(static_cast<size_t>(m) + 1);
  ScaledValue t = ScaledValue::of(t0);
  for (int k = 0; k <= m; ++k) {
    titer[static_cast<size_t>(k)] = t;
    t = ScaledValue::of(2.0) * t * t - ScaledValue::one();
  }
  ScaledValue tail = ScaledValue::one();  // k = m+1
  ScaledValue sum = tail;
  for (int k = m; k >= 1; --k) {
    tail = ScaledValue::of(2.0) * titer[static_cast<size_t>(k)] * tail;
    sum = sum + tail;
  }
  ScaledValue u = ScaledValue::of(2.0) * titer[0] * tail;  // tail at k = 0

  Complex a = (v[0] * v[0] - v[1] * v[1]) / d;
  Complex b = (v[0] * v[2] - v[1] * v[3]) / d;
  Complex c = (v[2] * v[2] - v[3] * v[3]) / d;

  ScaledValue x0 = u * ScaledValue::of(a) - sum;
  ScaledValue x1 = u * ScaledValue::of(b);
  ScaledValue x3 = u * ScaledValue::of(c) + sum;

  double top = std::max({x0.log_abs(), x1.log_abs(), x3.log_abs()});
  if (top == -std::numeric_limits<double>::infinity()) return std::nullopt;
  ScaledValue ref(Complex(1.0, 0.0), top);
  Vec4c out{(x0 / ref).value(), (x1 / ref).value(), (x1 / ref).value(),
            (x3 / ref).value()};
  return normalize(out, tol.eps_zero);
}

Complex f_series(Complex tau_value, int n) {
  ScaledValue t = ScaledValue::of(tau_value);
  ScaledValue denom = ScaledValue::one();  // 2^k prod_{j<k} T^j(tau)
  Complex sum{0.0, 0.0};
  for (int k = 1; k <= n + 1; ++k) {
    denom = denom * ScaledValue::of(2.0) * t;  // folds in T^{k-1}
    sum += (ScaledValue::one() / denom).value();
    t = ScaledValue::of(2.0) * t * t - ScaledValue::one();
  }
  return sum;
}

Complex f_partial(const PencilPoint& z, int n, bool strict,
                  const Tolerances& tol) {
  TauResult t = tau(z, tol);
  if (!t.finite())
    throw std::domain_error("f_partial: tau is not finite at this point");
  if (strict && cheb::on_band(t.value, tol.eps_band))
    throw cheb::BandError("f_partial: tau lies on [-1,1]");
  return f_series(t.value, n);
}

Complex f_limit(const PencilPoint& z, const Tolerances& tol) {
  TauResult t = tau(z, tol);
  if (!t.finite())
    throw std::domain_error("f_limit: tau is not finite at this point");
  if (cheb::on_band(t.value, tol.eps_band))
    throw cheb::BandError("f_limit: tau lies on [-1,1]");
  Complex s = std::sqrt(Complex(1.0, 0.0) - t.value * t.value);
  Complex c1 = t.value - Complex(0.0, 1.0) * s;
  Complex c2 = t.value + Complex(0.0, 1.0) * s;
  Complex ref = f_series(t.value, 60);
  return std::abs(c1 - ref) <= std::abs(c2 - ref) ? c1 : c2;
}

Complex left_regular_symbol(const PencilPoint& z, double theta) {
  return z[0] * z[0] + z[3] * z[3] - z[1] * z[1] - z[2] * z[2] +
         2.0 * std::cos(theta) * (z[0] * z[3] - z[1] * z[2]);
}

}  // namespace specdyn::dihedral
