// SPDX-License-Identifier: Apache-2.0
//
// Tanh-sinh quadrature on the real line and Gauss-Legendre panels on the
// spectral half-axis.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include <Eigen/Core>

#include "bc1/errors.hpp"

namespace bc1 {

struct QuadConfig {
  double tolerance = 1e-10;       ///< target relative accuracy
  double truncation = 12.0;       ///< first real-line cut; extended while the tail matters
  double spectral_cutoff = 40.0;  ///< spectral axis is cut to (0, Lambda]
  int max_levels = 9;             ///< tanh-sinh step halvings / panel bisections
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& v) {
  return v.cwiseAbs().maxCoeff();
}

template <class V>
V zero() {
  if constexpr (requires { V::Zero(); }) {
    return V::Zero();
  } else {
    return V(0);
  }
}

}  // namespace detail

template <class V>
struct QuadResult {
  V value = detail::zero<V>();
  double abs_integral = 0.0;  ///< integral of |f|, the error scale
  double error_estimate = 0.0;
  int evaluations = 0;
};

namespace detail {

// 20-point Gauss-Legendre on [-1, 1], positive half.
inline constexpr double kGaussNodes[10] = {
    0.0765265211334973338, 0.2277858511416450781, 0.3737060887154195607, 0.5108670019508270980,
    0.6360536807265150255, 0.7463319064601507926, 0.8391169718222188234, 0.9122344282513259059,
    0.9639719272779137913, 0.9931285991850949248};
inline constexpr double kGaussWeights[10] = {
    0.1527533871307258507, 0.1491729864726037467, 0.1420961093183820514, 0.1316886384491766269,
    0.1181945319615184174, 0.1019301198172404351, 0.0832767415767047487, 0.0626720483341090636,
    0.0406014298003869413, 0.0176140071391521183};

/// Tanh-sinh rule for int_a^b g, halving the step until successive levels
/// agree to cfg.tolerance of int |g|.
template <class V, class G>
QuadResult<V> tanh_sinh(G&& g, double a, double b, const QuadConfig& cfg) {
  constexpr double kHalfPi = 1.5707963267948966;
  // beyond |u| = 3.5 the weights underflow relative to double precision
  constexpr double kUMax = 3.5;
  const double L = b - a;

  QuadResult<V> out;
  V sum = zero<V>();
  double abs_sum = 0.0;
  auto node = [&](double u) {
    const double s = kHalfPi * std::sinh(u);
    const double e = std::exp(-2.0 * s);
    // distance from a, written without cancellation near the endpoint a
    const double x = L / (1.0 + e);
    const double cs = std::cosh(s);
    const double w = 0.5 * L * kHalfPi * std::cosh(u) / (cs * cs);
    if (!(x > 0.0) || w == 0.0 || !std::isfinite(w)) return;
    const V value = g(a + x);
    ++out.evaluations;
    sum += w * value;
    abs_sum += w * magnitude(value);
  };

  double h = 0.5;
  int steps = static_cast<int>(2.0 * kUMax / h);
  for (int i = 0; i <= steps; ++i) node(-kUMax + i * h);
  V previous = h * sum;
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    steps *= 2;
    for (int i = 1; i < steps; i += 2) node(-kUMax + i * h);
    const V current = h * sum;
    out.value = current;
    out.abs_integral = h * abs_sum;
    out.error_estimate = magnitude(current - previous);
    if (level >= 3 && out.error_estimate <= cfg.tolerance * out.abs_integral) return out;
    previous = current;
  }
  if (out.error_estimate <= cfg.tolerance * out.abs_integral + 1e-300) return out;
  throw ConvergenceError("tanh-sinh quadrature did not reach tolerance (estimate " +
                         std::to_string(out.error_estimate) + ")");
}

/// 20-point Gauss-Legendre estimate of int_a^b |g|.
template <class G>
double gauss_abs(G&& g, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 10; ++i) {
    s += kGaussWeights[i] * (magnitude(g(mid - half * kGaussNodes[i])) + magnitude(g(mid + half * kGaussNodes[i])));
  }
  return half * s;
}

}  // namespace detail

/// int_R f(t) dt applied to the pair f(t) + f(-t) on [0, infinity), so an
/// odd f integrates to exactly 0. The rule runs on [0, T] with
/// T = cfg.truncation; the tail is probed on [T, 2T], [2T, 4T], ... and
/// integrated until a probe falls below cfg.tolerance of the running |f|
/// integral. Throws ConvergenceError if a level sequence does not settle or
/// the tail is still significant at T = 2^8 cfg.truncation.
template <class V, class F>
QuadResult<V> integrate_symmetric(F&& f, const QuadConfig& cfg) {
  auto pair = [&](double t) -> V { return f(t) + f(-t); };
  QuadResult<V> out = detail::tanh_sinh<V>(pair, 0.0, cfg.truncation, cfg);
  double T = cfg.truncation;
  for (int doubling = 0;; ++doubling) {
    if (detail::gauss_abs(pair, T, 2.0 * T) <= cfg.tolerance * out.abs_integral) return out;
    if (doubling == 8) throw ConvergenceError("integrand tail still significant at t = " + std::to_string(T));
    const QuadResult<V> tail = detail::tanh_sinh<V>(pair, T, 2.0 * T, cfg);
    out.value += tail.value;
    out.abs_integral += tail.abs_integral;
    out.error_estimate += tail.error_estimate;
    out.evaluations += tail.evaluations + 20;
    T *= 2.0;
  }
}

/// int_0^{L} f(nu) d nu by 20-point Gauss-Legendre on unit panels, each
/// bisected until halves and whole agree to cfg.tolerance of the running
/// |f| integral.
QuadResult<double> integrate_half_axis(const std::function<double(double)>& f, double upper,
                                       const QuadConfig& cfg);

}  // namespace bc1
