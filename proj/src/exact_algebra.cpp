// SPDX-License-Identifier: Apache-2.0
#include "bc1/exact_algebra.hpp"

#include "bc1/errors.hpp"
#include "bc1/series.hpp"

namespace bc1 {
namespace {

void require_index(int value, const char* name) {
  if (value < 0) throw ParameterError(std::string(name) + " must be non-negative");
}

SigmaSpan weight(const AlgebraParams& p) { return SigmaSpan::monomial(p, 0, 0); }

OperatorPoly d_plus_rho(const AlgebraParams& p) { return OperatorPoly::linear(p.rho(), Rational(1)); }

}  // namespace

SigmaSpan cherednik_apply(const SigmaSpan& f) {
  const AlgebraParams& p = f.base();
  const Rational rho = p.rho();
  SigmaSpan out(p);
  for (const auto& [key, c] : f.terms()) {
    const Rational a = p.sigma + 2 * key.shift;
    if (key.tanh_power == 0) {
      out.add_term(key.shift, 0, -rho * c);
      out.add_term(key.shift, 1, -a * c);
    } else {
      out.add_term(key.shift, 0, (2 * rho - a) * c);
      out.add_term(key.shift, 1, rho * c);
      out.add_term(key.shift + 1, 0, (a + 1 - p.iota) * c);
    }
  }
  return out;
}

SigmaSpan operator_apply(const OperatorPoly& poly, const SigmaSpan& f) {
  SigmaSpan acc(f.base());
  const auto& c = poly.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = cherednik_apply(acc);
    acc += f * *it;
  }
  return acc;
}

OperatorPoly bernstein_poly(const AlgebraParams& p, int m, int shift) {
  require_index(m, "m");
  const Rational base = p.half_gap() + shift;
  return rising_linear(base, Rational(1, 2), m) * rising_linear(base, Rational(-1, 2), m);
}

OperatorPoly lm_poly(const AlgebraParams& p, int k, int m, Parity parity) {
  require_index(k, "k");
  require_index(m, "m");
  OperatorPoly out;
  for (int j = 0; j <= k; ++j) {
    out += bernstein_poly(p, j, m) * lm_coefficient(p, k, m, j, parity);
  }
  return out;
}

IdentityCheck bernstein_even(const AlgebraParams& p, int m) {
  require_index(m, "m");
  return {operator_apply(bernstein_poly(p, m), weight(p)),
          SigmaSpan::monomial(p, m, 0, shift_constant(p, m, Parity::even))};
}

IdentityCheck bernstein_odd(const AlgebraParams& p, int m) {
  require_index(m, "m");
  return {operator_apply(d_plus_rho(p) * bernstein_poly(p, m), weight(p)),
          SigmaSpan::monomial(p, m, 1, shift_constant(p, m, Parity::odd))};
}

IdentityCheck bernstein_weighted(const AlgebraParams& p, int m, int k, Parity parity) {
  OperatorPoly op = bernstein_poly(p, m) * lm_poly(p, k, m, parity);
  if (parity == Parity::odd) op = d_plus_rho(p) * op;
  return {operator_apply(op, weight(p)), weight_span(p, m, k, parity) * shift_constant(p, m, parity)};
}

SigmaSpan weight_span(const AlgebraParams& p, int m, int k, Parity parity) {
  require_index(m, "m");
  require_index(k, "k");
  SigmaSpan out(p);
  out.add_term(m, 2 * k + tanh_power(parity), Rational(1));
  return out;
}

OperatorPoly rodrigues_poly(const AlgebraParams& p, int n, Parity parity) {
  require_index(n, "n");
  const Rational s0p1 = p.sigma0() + 1;
  const Rational upper = n + p.sigma0() + p.delta(parity) + 1;
  const Rational last = p.sigma / 2 + (parity == Parity::odd ? 1 : 0);
  OperatorPoly series;
  for (int m = 0; m <= n; ++m) {
    const Rational coeff = pochhammer(Rational(-n), m) * pochhammer(upper, m) /
                           (nonzero_pochhammer(s0p1, m, "sigma0+1") *
                            nonzero_pochhammer(p.shifted_half(), m, "(sigma+1-iota)/2") *
                            nonzero_pochhammer(last, m, "sigma/2") * factorial<Rational>(m));
    series += bernstein_poly(p, m) * coeff;
  }
  series *= pochhammer(s0p1, n) / factorial<Rational>(n);
  if (parity == Parity::odd) series = d_plus_rho(p) * series * (Rational(-1) / p.sigma);
  return series;
}

OperatorPoly rodrigues_poly(const AlgebraParams& p, int n, int k, Parity parity) {
  require_index(n, "n");
  require_index(k, "k");
  OperatorPoly sum;
  for (int m = 0; m <= n; ++m) {
    const Rational coeff = q_series_coefficient(p, n, k, parity, m) / shift_constant(p, m, parity);
    sum += bernstein_poly(p, m) * lm_poly(p, k, m, parity) * coeff;
  }
  if (parity == Parity::odd) sum = d_plus_rho(p) * sum;
  return sum;
}

SigmaSpan rodrigues_span(const AlgebraParams& p, int n, int k, Parity parity) {
  const OperatorPoly op = k == 0 ? rodrigues_poly(p, n, parity) : rodrigues_poly(p, n, k, parity);
  return operator_apply(op, weight(p));
}

SigmaSpan direct_q_span(const AlgebraParams& p, int n, int k, Parity parity) {
  require_index(n, "n");
  require_index(k, "k");
  SigmaSpan out(p);
  for (int m = 0; m <= n; ++m) {
    out += weight_span(p, m, k, parity) * q_series_coefficient(p, n, k, parity, m);
  }
  return out;
}

}  // namespace bc1
