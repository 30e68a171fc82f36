// SPDX-License-Identifier: Apache-2.0
//
// Scalar-generic coefficients shared by the exact (Rational) and the floating
// (double / std::complex<double>) layers. Every function here is a plain
// product of Pochhammer symbols; nothing is approximated.
#pragma once

#include <string>

#include "bc1/errors.hpp"
#include "bc1/params.hpp"

namespace bc1 {

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), (a)_0 = 1.
template <class S>
S pochhammer(const S& a, int m) {
  S result(1);
  for (int j = 0; j < m; ++j) result *= a + S(j);
  return result;
}

template <class S>
S factorial(int n) {
  S result(1);
  for (int j = 2; j <= n; ++j) result *= S(j);
  return result;
}

/// Pochhammer symbol meant as a divisor; throws DegeneracyError on zero.
template <class S>
S nonzero_pochhammer(const S& a, int m, const char* what) {
  S result = pochhammer(a, m);
  if (result == S(0)) {
    throw DegeneracyError(std::string("vanishing Pochhammer divisor (") + what + ")_" +
                          std::to_string(m));
  }
  return result;
}

/// Divisor of the Bernstein-Sato shift by m:
/// even: b_{m,sigma} = (sigma/2)_m ((sigma+1-iota)/2)_m
/// odd:  (-sigma) (sigma/2+1)_m ((sigma+1-iota)/2)_m
template <class S>
S shift_constant(const Multiplicities<S>& p, int m, Parity parity) {
  const S half_sigma = p.sigma / S(2);
  if (parity == Parity::even) {
    return nonzero_pochhammer(half_sigma, m, "sigma/2") *
           nonzero_pochhammer(p.shifted_half(), m, "(sigma+1-iota)/2");
  }
  if (p.sigma == S(0)) throw DegeneracyError("sigma = 0 in odd shift constant");
  return -p.sigma * nonzero_pochhammer<S>(half_sigma + S(1), m, "sigma/2+1") *
         nonzero_pochhammer(p.shifted_half(), m, "(sigma+1-iota)/2");
}

/// Coefficient of w_{sigma+2m,k} tanh^e in Q^{(k)}_{n,parity}, read off the
/// terminating 2F1 form of P_n^{(sigma0, delta+2k)}(2 tanh^2 t - 1) with
/// argument cosh^{-2} t:
///   (sigma0+1)_n/n! * (-n)_m (n+sigma0+delta+2k+1)_m / ((sigma0+1)_m m!).
template <class S>
S q_series_coefficient(const Multiplicities<S>& p, int n, int k, const S& delta, int m) {
  const S a0 = p.sigma0() + S(1);
  const S upper = S(n) + p.sigma0() + delta + S(2 * k) + S(1);
  return pochhammer(a0, n) / factorial<S>(n) * pochhammer(S(-n), m) * pochhammer(upper, m) /
         (nonzero_pochhammer(a0, m, "sigma0+1") * factorial<S>(m));
}

template <class S>
S q_series_coefficient(const Multiplicities<S>& p, int n, int k, Parity parity, int m) {
  return q_series_coefficient(p, n, k, p.delta(parity), m);
}

/// j-th coefficient of L_{k,m} (even) or M_{k,m} (odd):
///   (-k)_j / ((sigma/2 + m + [odd])_j ((sigma+1-iota)/2 + m)_j j!).
template <class S>
S lm_coefficient(const Multiplicities<S>& p, int k, int m, int j, Parity parity) {
  const S first = p.sigma / S(2) + S(m) + S(parity == Parity::odd ? 1 : 0);
  return pochhammer(S(-k), j) /
         (nonzero_pochhammer(first, j, "sigma/2+m") *
          nonzero_pochhammer<S>(p.shifted_half() + S(m), j, "(sigma+1-iota)/2+m") * factorial<S>(j));
}

/// ((sigma-rho+x)/2 + shift)_m ((sigma-rho-x)/2 + shift)_m evaluated at x.
template <class S, class X>
X bernstein_factor(const Multiplicities<S>& p, int m, int shift, const X& x) {
  const X base = X(p.half_gap()) + X(shift);
  return pochhammer<X>(base + x / X(2), m) * pochhammer<X>(base - x / X(2), m);
}

}  // namespace bc1
