#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace specdyn {

using Complex = std::complex<double>;

/// A complex value stored as mantissa * exp(log_scale).
///
/// Three-term recurrences such as G_n and iterated quadratic maps have
/// magnitudes that grow geometrically (or doubly exponentially) and leave
/// double range long before the quantities of interest -- ratios, relative
/// deviations, signs of cancellation -- become meaningless.  Keeping the
/// magnitude in a separate natural-log exponent makes every operation safe.
/// Invariant: 0.5 <= |mantissa| <= 2 unless the value is zero (mantissa 0).
class ScaledValue {
 public:
  ScaledValue() = default;
  ScaledValue(Complex mantissa, double log_scale)
      : m_(mantissa), e_(log_scale) {
    renorm();
  }

  static ScaledValue of(Complex v) { return ScaledValue(v, 0.0); }
  static ScaledValue of(double v) { return ScaledValue(Complex(v, 0.0), 0.0); }
  static ScaledValue one() { return of(1.0); }

  Complex mantissa() const { return m_; }
  double log_scale() const { return e_; }
  bool is_zero() const { return m_ == Complex(0.0, 0.0); }

  /// log|value|; -infinity for zero.
  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(m_)) + e_;
  }

  /// Collapse to a plain complex; overflows to inf and underflows to 0.
  Complex value() const {
    if (is_zero()) return {0.0, 0.0};
    return m_ * std::exp(e_);
  }

  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return ScaledValue(a.m_ * b.m_, a.e_ + b.e_);
  }
  friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
    return ScaledValue(a.m_ / b.m_, a.e_ - b.e_);
  }
  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledValue& hi = (a.e_ >= b.e_) ? a : b;
    const ScaledValue& lo = (a.e_ >= b.e_) ? b : a;
    return ScaledValue(hi.m_ + lo.m_ * std::exp(lo.e_ - hi.e_), hi.e_);
  }
  friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
    return a + (-b);
  }
  ScaledValue operator-() const {
    ScaledValue r = *this;
    r.m_ = -r.m_;
    return r;
  }

  /// Integer power by repeated squaring (k >= 0).
  ScaledValue pow_i(long k) const {
    ScaledValue r = one();
    ScaledValue b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  ScaledValue abs() const { return ScaledValue(std::abs(m_), e_); }

  /// |a - b| / max(|a|, |b|); zero when both vanish.
  static double relative_diff(const ScaledValue& a, const ScaledValue& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    ScaledValue d = a - b;
    if (d.is_zero()) return 0.0;
    double den = std::max(a.log_abs(), b.log_abs());
    return std::exp(std::min(d.log_abs() - den, 700.0));
  }

 private:
  void renorm() {
    double a = std::abs(m_);
    if (a == 0.0) {
      e_ = 0.0;
      return;
    }
    if (!(a >= 0.5 && a <= 2.0) && std::isfinite(a)) {
      e_ += std::log(a);
      m_ /= a;
    }
  }

  Complex m_{0.0, 0.0};
  double e_ = 0.0;
};

}  // namespace specdyn
