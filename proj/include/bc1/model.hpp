// SPDX-License-Identifier: Apache-2.0
//
// Floating-point BC1 model: measure, weights, the Jacobi-type functions
// Q^{(k)}_{n,+-1}, the Opdam eigenfunction, c-functions, the spectral density
// and the closed-form Cherednik-Opdam transforms.
#pragma once

#include "bc1/params.hpp"
#include "bc1/specfun.hpp"

namespace bc1 {

/// Label of Q^{(k)}_{n,parity}.
struct QSpec {
  int n = 0;
  int k = 0;
  Parity parity = Parity::even;
};

/// Point lambda = i nu of the spectrum, nu > 0.
struct SpectralPoint {
  double nu;

  explicit SpectralPoint(double nu_value);
  Complex lambda() const { return {0.0, nu}; }
};

/// (F_1 f(lambda), F_{-1} f(lambda)).
struct TransformValue {
  Complex plus;
  Complex minus;
};

/// Variant of the odd-case Pochhammer (n + sigma0 + delta + 2k + 1)_m in the
/// k > 0 closed transform.
enum class OddDelta { delta0, delta1 };

/// 2^{2b+iota} |sinh t|^{2b} |sinh 2t|^{iota}.
double mu_density(const BC1Params& p, double t);

/// w_{sigma+2m,k}(t) = cosh^{-(sigma+2m)} t tanh^{2k} t.
double weight_eval(const BC1Params& p, int m, int k, double t);

/// Q^{(k)}_{n,+1} = w_{sigma,k} P_n^{(sigma0, delta0+2k)}(2 tanh^2 t - 1), and the
/// odd counterpart with delta1 and an extra factor tanh t.
double q_eval(const BC1Params& p, const QSpec& spec, double t);

/// ||Q^{(k)}_{n,+-1}||^2 in L2(R, dmu):
///   2^{2 rho} Gamma(n+sigma0+1) Gamma(n+delta+2k+1)
///     / (n! (2n+sigma0+delta+2k+1) Gamma(n+sigma0+delta+2k+1)).
double q_norm_sq_closed(const BC1Params& p, const QSpec& spec);

/// Opdam eigenfunction, D G(lambda, .) = lambda G(lambda, .), G(lambda, 0) = 1:
///   G = 2F1((lambda+rho)/2, (rho-lambda)/2; (1+iota)/2 + b; -sinh^2 t)
///     + sinh(2t)/(rho - lambda) 2F1'(...; -sinh^2 t).
/// Throws PoleError at lambda = rho.
Complex eigenfunction_G(const BC1Params& p, Complex lambda, double t);

/// c(lambda) = Gamma(lambda) Gamma(lambda/2 + b/2) / (Gamma(lambda+b) Gamma(lambda/2 + b/2 + iota/2)).
Complex c_function(const BC1Params& p, Complex lambda);
/// c_{-1}(lambda): the same quotient with every argument raised by one.
Complex c_minus1(const BC1Params& p, Complex lambda);

/// Density of dmuhat w.r.t. d nu on i R+: (2 pi)^{-1} c_{-1}(rho)^2 / |c(i nu)|^2.
double muhat_density(const BC1Params& p, const SpectralPoint& point);

/// Spherical transform of w_sigma:
///   2^{2 rho} Gamma((iota+1+2b)/2) Gamma(sigma/2 - rho) / Gamma((sigma+1-iota)/2)
///     prod_{+-} Gamma((sigma-rho)/2 +- lambda/2) / Gamma((sigma-rho)/2 +- rho/2).
/// Requires sigma > 2(iota + b).
Complex w_tilde(const BC1Params& p, Complex lambda);

/// Rodrigues polynomial Q^{(0)}_{n,parity}(x) (4F3 form) at x.
Complex rodrigues_poly_eval(const BC1Params& p, int n, Parity parity, Complex x);

/// L_{k,m}(x) (even) or M_{k,m}(x) (odd).
Complex lm_poly_eval(const BC1Params& p, Parity which, int k, int m, Complex x);

/// Closed-form transform of Q^{(k)}_{n,parity}. Components are
/// F_{+-1} f(lambda) = int f(t) G(+-lambda, -t) dmu(t); for odd specs the
/// component carries the factor (+-lambda + rho).
TransformValue closed_transform(const BC1Params& p, const QSpec& spec, Complex lambda,
                                OddDelta odd_delta = OddDelta::delta1);
TransformValue closed_transform(const BC1Params& p, const QSpec& spec, const SpectralPoint& point,
                                OddDelta odd_delta = OddDelta::delta1);

}  // namespace bc1
