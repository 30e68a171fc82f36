// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bc1/errors.hpp"
#include "bc1/series.hpp"

namespace bc1 {

using Complex = std::complex<double>;

/// Gamma function of a real argument (Lanczos, reflection below 1/2).
/// Throws PoleError at non-positive integers, OverflowError above ~171.6.
double gamma_real(double x);
/// log Gamma(x) for x > 0.
double log_gamma_real(double x);

/// Complex log Gamma (some branch; only exp() and differences are meaningful).
Complex log_gamma(Complex z);
Complex gamma_complex(Complex z);

/// Parameters of a generalized hypergeometric series pFq.
struct HypSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;

  /// n such that some upper parameter equals -n; -1 if the series does not
  /// terminate.
  int termination_index() const;
};

/// Terminating pFq(upper; lower; arg), n+1 terms. Throws ParameterError when
/// the series does not terminate and DegeneracyError on a vanishing lower
/// Pochhammer symbol within the summation range.
Complex hyp_terminating(const HypSpec& spec, Complex arg);

/// Scalar-generic terminating sum over m = 0..n (exact for Rational).
template <class S>
S hyp_terminating_sum(const std::vector<S>& upper, const std::vector<S>& lower, int n, const S& arg) {
  S term(1);
  S sum(1);
  for (int m = 0; m < n; ++m) {
    S num(1);
    S den(1);
    for (const auto& a : upper) num *= a + S(m);
    for (const auto& b : lower) den *= b + S(m);
    if (den == S(0)) throw DegeneracyError("lower parameter hits a non-positive integer at index " + std::to_string(m));
    term = term * num / den * arg / S(m + 1);
    sum += term;
  }
  return sum;
}

/// Gauss 2F1(a, b; c; x) for real x <= 0 via the Pfaff transformation
///   2F1(a,b;c;x) = (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)).
/// The transformed argument z lies in [0, 1); for z > 1/2 the series is
/// continued towards z = 1 by re-expanding the hypergeometric equation.
Complex gauss_2f1(Complex a, Complex b, Complex c, double x);

/// d/dx 2F1(a, b; c; x) = (ab/c) 2F1(a+1, b+1; c+1; x).
Complex gauss_2f1_deriv(Complex a, Complex b, Complex c, double x);

/// Plain power series of 2F1 for |z| < 1; throws ConvergenceError after
/// 10^5 terms.
Complex gauss_2f1_series(Complex a, Complex b, Complex c, double z);

/// Jacobi polynomial P_n^{(alpha, beta)}(x) via
/// (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
double jacobi_poly(int n, double alpha, double beta, double x);

}  // namespace bc1
