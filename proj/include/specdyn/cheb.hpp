#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "specdyn/projective.hpp"
#include "specdyn/scaled.hpp"

namespace specdyn::cheb {

inline constexpr double kEpsBand = 1e-9;

/// Thrown when an argument lies on (or within eps of) a real segment where
/// the requested limit does not exist.
struct BandError : std::domain_error {
  using std::domain_error::domain_error;
};

/// True when x is within eps of the segment [-1,1] of the real axis.
template <class T>
bool on_band(const T& x, double eps = kEpsBand) {
  double re, im;
  if constexpr (std::is_floating_point_v<T>) {
    re = x;
    im = 0.0;
  } else {
    re = x.real();
    im = x.imag();
  }
  return std::abs(im) <= eps && re >= -1.0 - eps && re <= 1.0 + eps;
}

/// Distance of x to the segment [lo,hi] of the real axis.
inline double segment_distance(Complex x, double lo, double hi) {
  double c = std::min(std::max(x.real(), lo), hi);
  return std::abs(x - Complex(c, 0.0));
}

inline double band_distance(Complex x) { return segment_distance(x, -1.0, 1.0); }

/// n-fold composition of z -> 2z^2 - 1; t_iter(x, 0) == x.
/// Escape to infinity shows up as complex infinity in the result.
template <class T>
T t_iter(T x, int n) {
  for (int k = 0; k < n; ++k) x = T(2) * x * x - T(1);
  return x;
}

/// Chebyshev polynomial of the second kind by the three-term recurrence
/// U_{n+1} = 2x U_n - U_{n-1}, U_0 = 1, U_1 = 2x.
template <class T>
T u(int n, T x) {
  if (n == 0) return T(1);
  T prev = T(1);
  T cur = T(2) * x;
  for (int k = 1; k < n; ++k) {
    T next = T(2) * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// U_n(x) / U_{n+1}(x), evaluated with a rescaled pair so large n never
/// overflows.  Off [-1,1] the denominator has no zeros.
template <class T>
T u_ratio(int n, T x) {
  T prev = T(1);      // U_0
  T cur = T(2) * x;   // U_1
  for (int k = 1; k <= n; ++k) {
    T next = T(2) * x * cur - prev;
    prev = cur;
    cur = next;
    double a = std::abs(cur);
    if (a > 1e100) {
      prev /= a;
      cur /= a;
    }
  }
  return prev / cur;
}

/// The n zeros of U_n, ascending.  Written as sin(pi (2k - n - 1)/(2(n+1)))
/// so the zero set is exactly symmetric and the middle zero of odd n is 0.
inline std::vector<double> u_zeros(int n) {
  if (n < 1) throw std::invalid_argument("u_zeros: n must be >= 1");
  std::vector<double> zs(static_cast<size_t>(n));
  const double pi = 3.14159265358979323846;
  for (int k = 1; k <= n; ++k)
    zs[static_cast<size_t>(k - 1)] =
        std::sin(pi * (2.0 * k - n - 1.0) / (2.0 * (n + 1)));
  return zs;
}

/// lim U_n(x)/U_{n+1}(x) = x - sqrt(x^2 - 1), the branch of modulus < 1.
/// The two candidates are reciprocal, so the one computed from the principal
/// square root is replaced by x + sqrt(x^2 - 1) when its modulus exceeds 1.
inline Complex ratio_limit(Complex x, double eps_band = kEpsBand) {
  if (on_band(x, eps_band))
    throw BandError("ratio_limit: argument on [-1,1]");
  Complex r = std::sqrt(x * x - Complex(1.0, 0.0));
  Complex lo = x - r;
  if (std::abs(lo) > 1.0) lo = x + r;
  return lo;
}

/// Homogeneous bivariate Chebyshev-type polynomial
/// P_n(x,y) = sum_k (-1)^k (n-k)!/(k! (n-2k)!) x^{n-2k} y^k,
/// evaluated branch-free by P_{n+1} = x P_n - y P_{n-1}, P_0 = 1, P_1 = x.
inline ScaledValue p(int n, Complex x, Complex y) {
  if (n < 0) throw std::invalid_argument("p: n must be >= 0");
  ScaledValue prev = ScaledValue::one();
  if (n == 0) return prev;
  ScaledValue cur = ScaledValue::of(x);
  ScaledValue sx = ScaledValue::of(x);
  ScaledValue sy = ScaledValue::of(y);
  for (int k = 1; k < n; ++k) {
    ScaledValue next = sx * cur - sy * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Stepper for the lamplighter sequence
///   G_{n+1} = (z0+z1) G_n - 4 z2 z3 G_{n-1},  G_{-1} = 1, G_0 = z0 - z1,
/// carrying a scale-free cancellation residual per index: |G_n| measured
/// against the terms that formed it.  residual == 0 iff z lies on Gamma_n.
class GRecurrence {
 public:
  explicit GRecurrence(const PencilPoint& z)
      : s_(ScaledValue::of(z[0] + z[1])),
        q_(ScaledValue::of(4.0 * z[2] * z[3])),
        prev_(ScaledValue::one()),
        cur_(ScaledValue::of(z[0] - z[1])) {
    double ref = std::max(std::abs(z[0]), std::abs(z[1]));
    residual_ = safe_ratio(cur_.abs().log_abs(),
                           ref > 0.0 ? std::log(ref) : -1e9);
  }

  int index() const { return n_; }
  const ScaledValue& current() const { return cur_; }    // G_n
  const ScaledValue& previous() const { return prev_; }  // G_{n-1}
  double residual() const { return residual_; }

  /// G_n / G_{n-1} (the delta of the Q recursion); inf when G_{n-1} == 0.
  Complex delta() const { return (cur_ / prev_).value(); }

  void advance() {
    ScaledValue t1 = s_ * cur_;
    ScaledValue t2 = q_ * prev_;
    ScaledValue next = t1 - t2;
    residual_ = safe_ratio(next.abs().log_abs(),
                           std::max(t1.log_abs(), t2.log_abs()));
    prev_ = cur_;
    cur_ = next;
    ++n_;
  }

 private:
  static double safe_ratio(double log_num, double log_den) {
    if (log_num == -std::numeric_limits<double>::infinity()) return 0.0;
    if (log_den == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp(std::min(log_num - log_den, 700.0));
  }

  ScaledValue s_, q_, prev_, cur_;
  double residual_ = 0.0;
  int n_ = 0;
};

/// G_n(z) by the three-term recurrence, scale-tracked.
inline ScaledValue g(int n, const PencilPoint& z) {
  if (n < 0) throw std::invalid_argument("g: n must be >= 0");
  GRecurrence rec(z);
  for (int k = 0; k < n; ++k) rec.advance();
  return rec.current();
}

}  // namespace specdyn::cheb
