// SPDX-License-Identifier: Apache-2.0
//
// Exact action of the BC1 Cherednik operator
//   D = d/dt + 2 iota (1 - e^{-4t})^{-1} (1 - s) + 2 b (1 - e^{-2t})^{-1} (1 - s) - rho
// on the closed family spanned by E_m = cosh^{-(sigma+2m)} and
// O_m = cosh^{-(sigma+2m)} tanh, and the operator identities built on it.
#pragma once

#include "bc1/params.hpp"
#include "bc1/polynomial.hpp"
#include "bc1/sigma_span.hpp"

namespace bc1 {

/// D f, exact. With a = sigma + 2m:
///   D E_m = -rho E_m - a O_m
///   D O_m = (2 rho - a) E_m + rho O_m + (a + 1 - iota) E_{m+1}
SigmaSpan cherednik_apply(const SigmaSpan& f);

/// P(D) f by Horner's scheme.
SigmaSpan operator_apply(const OperatorPoly& p, const SigmaSpan& f);

/// B_{m,sigma}(x) = ((sigma-rho+x)/2 + shift)_m ((sigma-rho-x)/2 + shift)_m.
OperatorPoly bernstein_poly(const AlgebraParams& p, int m, int shift = 0);

/// L_{k,m} (even) or M_{k,m} (odd): the terminating 3F2
///   sum_j (-k)_j ((sigma-rho+x)/2+m)_j ((sigma-rho-x)/2+m)_j
///         / ((sigma/2+m+[odd])_j ((sigma+1-iota)/2+m)_j j!)
OperatorPoly lm_poly(const AlgebraParams& p, int k, int m, Parity parity);

/// Both sides of an exact operator identity.
struct IdentityCheck {
  SigmaSpan lhs;
  SigmaSpan rhs;
  bool holds() const { return lhs == rhs; }
};

/// B_{m,sigma}(D) w_sigma against b_{m,sigma} w_{sigma+2m}.
IdentityCheck bernstein_even(const AlgebraParams& p, int m);
/// (D + rho) B_{m,sigma}(D) w_sigma against
/// (-sigma)(sigma/2+1)_m ((sigma+1-iota)/2)_m w_{sigma+2m} tanh.
IdentityCheck bernstein_odd(const AlgebraParams& p, int m);
/// Weighted generalisation: B L_{k,m} w_sigma = b_m w_{sigma+2m,k} (even) and
/// (D+rho) B M_{k,m} w_sigma = (odd constant) w_{sigma+2m,k} tanh (odd).
IdentityCheck bernstein_weighted(const AlgebraParams& p, int m, int k, Parity parity);

/// w_{sigma+2m,k} tanh^e expanded with tanh^{2k} = (1 - cosh^{-2})^k.
SigmaSpan weight_span(const AlgebraParams& p, int m, int k, Parity parity);

/// Rodrigues polynomial for k = 0 from its 4F3 form:
///   even: (sigma0+1)_n/n! 4F3(-n, n+sigma0+delta0+1, (sigma-rho+x)/2, (sigma-rho-x)/2;
///                              sigma0+1, (sigma+1-iota)/2, sigma/2; 1)
///   odd:  (sigma0+1)_n/(n! (-sigma)) (rho + x) 4F3(... delta1 ...; ..., sigma/2+1; 1)
OperatorPoly rodrigues_poly(const AlgebraParams& p, int n, Parity parity);

/// Operator polynomial with Q^{(k)}_{n,parity} = poly(D) w_sigma for any k,
/// assembled from the weighted Bernstein-Sato formulas.
OperatorPoly rodrigues_poly(const AlgebraParams& p, int n, int k, Parity parity);

/// Q^{(k)}_{n,parity} obtained by applying the Rodrigues polynomial to w_sigma.
/// k = 0 uses the 4F3 form, k > 0 the weighted construction.
SigmaSpan rodrigues_span(const AlgebraParams& p, int n, int k, Parity parity);

/// Q^{(k)}_{n,parity} expanded directly from the Jacobi polynomial.
SigmaSpan direct_q_span(const AlgebraParams& p, int n, int k, Parity parity);

}  // namespace bc1
