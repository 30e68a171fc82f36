// SPDX-License-Identifier: Apache-2.0
#include "bc1/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bc1/sigma_span.hpp"

namespace bc1 {
namespace {

void require_spec(const QSpec& spec) {
  if (spec.n < 0 || spec.k < 0) throw ParameterError("QSpec indices must be non-negative");
}

/// Complex division by a Pochhammer symbol that must not vanish.
Complex divide_nonzero(Complex value, Complex divisor, const char* what) {
  if (divisor == Complex(0.0)) throw DegeneracyError(std::string("vanishing divisor ") + what);
  return value / divisor;
}

}  // namespace

SpectralPoint::SpectralPoint(double nu_value) : nu(nu_value) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ParameterError("spectral point needs finite nu > 0");
}

double mu_density(const BC1Params& p, double t) {
  return std::pow(2.0, 2.0 * p.b + p.iota) * std::pow(std::abs(std::sinh(t)), 2.0 * p.b) *
         std::pow(std::abs(std::sinh(2.0 * t)), p.iota);
}

double weight_eval(const BC1Params& p, int m, int k, double t) {
  if (m < 0 || k < 0) throw ParameterError("weight indices must be non-negative");
  double v = std::exp(-(p.sigma + 2.0 * m) * log_cosh(t));
  if (k > 0) v *= std::pow(std::tanh(t), 2 * k);
  return v;
}

double q_eval(const BC1Params& p, const QSpec& spec, double t) {
  require_spec(spec);
  const double th = std::tanh(t);
  const double jac = jacobi_poly(spec.n, p.sigma0(), p.delta(spec.parity) + 2.0 * spec.k, 2.0 * th * th - 1.0);
  double v = weight_eval(p, 0, spec.k, t) * jac;
  if (spec.parity == Parity::odd) v *= th;
  return v;
}

double q_norm_sq_closed(const BC1Params& p, const QSpec& spec) {
  require_spec(spec);
  const double n = spec.n;
  const double alpha = p.sigma0();
  const double beta = p.delta(spec.parity) + 2.0 * spec.k;
  const double log_value = 2.0 * p.rho() * std::log(2.0) + log_gamma_real(n + alpha + 1.0) +
                           log_gamma_real(n + beta + 1.0) - log_gamma_real(n + 1.0) -
                           log_gamma_real(n + alpha + beta + 1.0);
  return std::exp(log_value) / (2.0 * n + alpha + beta + 1.0);
}

Complex eigenfunction_G(const BC1Params& p, Complex lambda, double t) {
  const double rho = p.rho();
  if (lambda == Complex(rho)) throw PoleError("G(lambda, t) has a pole at lambda = rho");
  const Complex a = 0.5 * (lambda + rho);
  const Complex b = 0.5 * (rho - lambda);
  const Complex c = 0.5 * (1.0 + p.iota) + p.b;
  const double sh = std::sinh(t);
  const double x = -sh * sh;
  const Complex even = gauss_2f1(a, b, c, x);
  if (t == 0.0) return even;
  return even + std::sinh(2.0 * t) / (rho - lambda) * gauss_2f1_deriv(a, b, c, x);
}

namespace {

Complex log_c_generic(const BC1Params& p, Complex lambda, double shift) {
  const Complex h = 0.5 * lambda;
  return log_gamma(lambda + shift) + log_gamma(h + 0.5 * p.b + shift) - log_gamma(lambda + p.b + shift) -
         log_gamma(h + 0.5 * p.b + 0.5 * p.iota + shift);
}

}  // namespace

Complex c_function(const BC1Params& p, Complex lambda) { return std::exp(log_c_generic(p, lambda, 0.0)); }

Complex c_minus1(const BC1Params& p, Complex lambda) { return std::exp(log_c_generic(p, lambda, 1.0)); }

double muhat_density(const BC1Params& p, const SpectralPoint& point) {
  // c(-i nu) = conj c(i nu) for real multiplicities
  const double log_c1 = std::real(log_c_generic(p, Complex(p.rho()), 1.0));
  const double log_abs_c = std::real(log_c_generic(p, point.lambda(), 0.0));
  return std::exp(2.0 * log_c1 - 2.0 * log_abs_c) / (2.0 * std::numbers::pi);
}

Complex w_tilde(const BC1Params& p, Complex lambda) {
  p.require_transform_domain("w_tilde");
  const double rho = p.rho();
  const double h = p.half_gap();
  const Complex log_value = 2.0 * rho * std::log(2.0) + log_gamma_real(0.5 * (p.iota + 1.0 + 2.0 * p.b)) +
                            log_gamma_real(0.5 * p.sigma - rho) - log_gamma_real(p.shifted_half()) +
                            log_gamma(h + 0.5 * lambda) + log_gamma(h - 0.5 * lambda) -
                            log_gamma_real(h + 0.5 * rho) - log_gamma_real(h - 0.5 * rho);
  Complex value = std::exp(log_value);
  // exactly real on i R and on R
  if (lambda.real() == 0.0 || lambda.imag() == 0.0) value.imag(0.0);
  return value;
}

namespace {

/// 4F3(-n, n+sigma0+delta+1, (sigma-rho+x)/2, (sigma-rho-x)/2; sigma0+1, (sigma+1-iota)/2, last; 1)
Complex rodrigues_4f3(const BC1Params& p, int n, Parity parity, Complex x) {
  const double h = p.half_gap();
  HypSpec spec;
  spec.upper = {Complex(-n), Complex(n + p.sigma0() + p.delta(parity) + 1.0), h + 0.5 * x, h - 0.5 * x};
  spec.lower = {Complex(p.sigma0() + 1.0), Complex(p.shifted_half()),
                Complex(0.5 * p.sigma + (parity == Parity::odd ? 1.0 : 0.0))};
  if (n == 0) return 1.0;
  return hyp_terminating(spec, 1.0);
}

}  // namespace

Complex rodrigues_poly_eval(const BC1Params& p, int n, Parity parity, Complex x) {
  if (n < 0) throw ParameterError("n must be non-negative");
  const double lead = pochhammer(p.sigma0() + 1.0, n) / factorial<double>(n);
  Complex value = lead * rodrigues_4f3(p, n, parity, x);
  if (parity == Parity::odd) value *= (p.rho() + x) / (-p.sigma);
  return value;
}

Complex lm_poly_eval(const BC1Params& p, Parity which, int k, int m, Complex x) {
  if (k < 0 || m < 0) throw ParameterError("k, m must be non-negative");
  Complex sum(0.0);
  for (int j = 0; j <= k; ++j) {
    sum += lm_coefficient(static_cast<const Multiplicities<double>&>(p), k, m, j, which) *
           bernstein_factor(static_cast<const Multiplicities<double>&>(p), j, m, x);
  }
  return sum;
}

TransformValue closed_transform(const BC1Params& p, const QSpec& spec, Complex lambda, OddDelta odd_delta) {
  p.require_transform_domain("closed_transform");
  require_spec(spec);
  const Complex wt = w_tilde(p, lambda);
  const Multiplicities<double>& mp = p;
  Complex series(0.0);
  if (spec.k == 0) {
    const double lead = pochhammer(p.sigma0() + 1.0, spec.n) / factorial<double>(spec.n);
    series = lead * rodrigues_4f3(p, spec.n, spec.parity, lambda);
    if (spec.parity == Parity::odd) series /= -p.sigma;
  } else {
    const double delta = spec.parity == Parity::even ? p.delta0()
                         : odd_delta == OddDelta::delta1 ? p.delta1()
                                                         : p.delta0();
    for (int m = 0; m <= spec.n; ++m) {
      const double coeff = q_series_coefficient(mp, spec.n, spec.k, delta, m);
      const Complex term = coeff * bernstein_factor(mp, m, 0, lambda) *
                           lm_poly_eval(p, spec.parity, spec.k, m, lambda);
      series += divide_nonzero(term, shift_constant(mp, m, spec.parity), "shift constant");
    }
  }
  if (spec.parity == Parity::even) return {wt * series, wt * series};
  const double rho = p.rho();
  return {(lambda + rho) * wt * series, (-lambda + rho) * wt * series};
}

TransformValue closed_transform(const BC1Params& p, const QSpec& spec, const SpectralPoint& point,
                                OddDelta odd_delta) {
  return closed_transform(p, spec, point.lambda(), odd_delta);
}

}  // namespace bc1
