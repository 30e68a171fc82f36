// SPDX-License-Identifier: Apache-2.0
#include "bc1/specfun.hpp"

#include <array>
#include <limits>
#include <numbers>

namespace bc1 {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = std::numbers::pi;
constexpr int kMaxSeriesTerms = 100000;
constexpr double kSeriesEps = 1e-17;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::round(x); }
bool is_nonpositive_integer(Complex z) { return z.imag() == 0.0 && is_nonpositive_integer(z.real()); }

/// log sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  if (std::abs(z.imag()) < 30.0) return std::log(std::sin(kPi * z));
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = -(e^{-i pi z} / 2i) (1 - e^{2 i pi z}), Im z > 0
  const Complex i(0.0, 1.0);
  return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) - std::log(-2.0 * i);
}

template <class T>
T lanczos_sum(T z) {
  T x(kLanczos[0]);
  for (std::size_t k = 1; k < kLanczos.size(); ++k) x += kLanczos[k] / (z + T(static_cast<double>(k)));
  return x;
}

/// True once three consecutive terms are negligible against the sum.
struct SeriesStop {
  int quiet = 0;
  bool update(double term_abs, double sum_abs) {
    quiet = term_abs <= kSeriesEps * sum_abs + 1e-300 ? quiet + 1 : 0;
    return quiet >= 3;
  }
};

/// F and F' of 2F1(a, b; c; z) by the power series.
void series_with_derivative(Complex a, Complex b, Complex c, double z, Complex& f, Complex& df) {
  Complex term(1.0);
  f = 1.0;
  df = 0.0;
  SeriesStop stop;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const Complex ratio = (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1));
    // derivative term: (n+1) t_{n+1} / z = t_n * ratio * (n+1)
    df += term * ratio * double(n + 1);
    term *= ratio * z;
    f += term;
    if (term == Complex(0.0)) return;
    if (stop.update(std::abs(term), std::abs(f))) return;
  }
  throw ConvergenceError("2F1 series did not converge at z=" + std::to_string(z));
}

/// Continues (F, F') of 2F1(a, b; c; .) from z0 = 1 - d0 to z = 1 - target by
/// Taylor re-expansion of z(1-z)F'' + (c-(a+b+1)z)F' - abF = 0, halving the
/// distance to the singular point z = 1 at each step.
void continue_towards_one(Complex a, Complex b, Complex c, double d0, double target, Complex& f, Complex& df) {
  const Complex ab = a * b;
  const Complex s1 = a + b + 1.0;
  double d = d0;
  while (d > target) {
    const double next = std::max(target, 0.5 * d);
    const double h = d - next;
    const double zc = 1.0 - d;
    const double p0 = zc * d;
    const double p1 = 2.0 * d - 1.0;
    const Complex q0 = c - s1 * zc;
    // scaled Taylor coefficients e_n = c_n h^n stay O(1) however small d gets
    Complex e_prev = f;
    Complex e_cur = df * h;
    Complex value = f + e_cur;
    Complex deriv = df;
    int quiet = 0;
    bool done = false;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
      const double nn = n;
      const Complex e_next = -((p1 * nn + q0) * (nn + 1.0) * h * e_cur + (-nn * (nn - 1.0) - s1 * nn - ab) * h * h * e_prev) /
                             (p0 * (nn + 2.0) * (nn + 1.0));
      const Complex term = e_next;
      const Complex dterm = (nn + 2.0) * e_next / h;
      value += term;
      deriv += dterm;
      e_prev = e_cur;
      e_cur = e_next;
      // the derivative matters only through h F' in the next step
      const double scale = kSeriesEps * (std::abs(value) + h * std::abs(deriv)) + 1e-300;
      const bool small = std::abs(term) <= scale && h * std::abs(dterm) <= scale;
      quiet = small ? quiet + 1 : 0;
      if (quiet >= 3) {
        done = true;
        break;
      }
    }
    if (!done) throw ConvergenceError("2F1 continuation did not converge");
    f = value;
    df = deriv;
    d = next;
  }
}

}  // namespace

double log_gamma_real(double x) {
  if (!(x > 0.0)) throw ParameterError("log_gamma_real needs x > 0");
  if (x < 0.5) return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma_real(1.0 - x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double gamma_real(double x) {
  if (std::isnan(x)) throw ParameterError("gamma_real of NaN");
  if (is_nonpositive_integer(x)) throw PoleError("Gamma pole at " + std::to_string(x));
  if (x > 171.6) throw OverflowError("Gamma overflows for x=" + std::to_string(x));
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_real(1.0 - x));
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * (half * std::exp(-t)) * half * lanczos_sum(z);
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma pole at " + std::to_string(z.real()));
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  const Complex w = z - 1.0;
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(lanczos_sum(w));
}

Complex gamma_complex(Complex z) { return std::exp(log_gamma(z)); }

int HypSpec::termination_index() const {
  int best = -1;
  for (const auto& a : upper) {
    if (is_nonpositive_integer(a)) {
      const int n = static_cast<int>(-a.real());
      if (best < 0 || n < best) best = n;
    }
  }
  return best;
}

Complex hyp_terminating(const HypSpec& spec, Complex arg) {
  const int n = spec.termination_index();
  if (n < 0) throw ParameterError("hypergeometric series does not terminate");
  return hyp_terminating_sum(spec.upper, spec.lower, n, arg);
}

Complex gauss_2f1_series(Complex a, Complex b, Complex c, double z) {
  if (is_nonpositive_integer(c)) throw DegeneracyError("2F1 lower parameter is a non-positive integer");
  Complex f, df;
  series_with_derivative(a, b, c, z, f, df);
  return f;
}

Complex gauss_2f1(Complex a, Complex b, Complex c, double x) {
  if (!(x <= 0.0)) throw ParameterError("gauss_2f1 is implemented for x <= 0 only");
  if (is_nonpositive_integer(c)) throw DegeneracyError("2F1 lower parameter is a non-positive integer");
  if (x == 0.0) return 1.0;
  const double one_minus_x = 1.0 - x;
  if (!std::isfinite(one_minus_x)) throw ConvergenceError("2F1 argument overflow");
  const double z = -x / one_minus_x;
  const double w = 1.0 / one_minus_x;  // 1 - z, kept exact
  const Complex prefactor = std::exp(-a * std::log(one_minus_x));
  const Complex b2 = c - b;
  Complex f, df;
  if (z <= 0.5) {
    series_with_derivative(a, b2, c, z, f, df);
  } else {
    series_with_derivative(a, b2, c, 0.5, f, df);
    continue_towards_one(a, b2, c, 0.5, w, f, df);
  }
  return prefactor * f;
}

Complex gauss_2f1_deriv(Complex a, Complex b, Complex c, double x) {
  if (is_nonpositive_integer(c)) throw DegeneracyError("2F1 lower parameter is a non-positive integer");
  return a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x);
}

namespace {

bool pochhammer_nonzero(double a, int n) {
  for (int j = 0; j < n; ++j) {
    if (a + j == 0.0) return false;
  }
  return true;
}

double jacobi_from_2f1(int n, double alpha, double beta, double x) {
  const double lead = pochhammer(alpha + 1.0, n) / factorial<double>(n);
  const std::vector<double> upper = {double(-n), n + alpha + beta + 1.0};
  const std::vector<double> lower = {alpha + 1.0};
  return lead * hyp_terminating_sum(upper, lower, n, 0.5 * (1.0 - x));
}

}  // namespace

double jacobi_poly(int n, double alpha, double beta, double x) {
  if (n < 0) throw ParameterError("Jacobi degree must be non-negative");
  if (n == 0) return 1.0;
  // P_n^{(a,b)}(x) = (-1)^n P_n^{(b,a)}(-x) keeps the series argument in [0, 1/2]
  if (x < 0.0 && pochhammer_nonzero(beta + 1.0, n)) {
    const double v = jacobi_from_2f1(n, beta, alpha, -x);
    return n % 2 == 0 ? v : -v;
  }
  if (!pochhammer_nonzero(alpha + 1.0, n)) throw DegeneracyError("alpha + 1 hits a non-positive integer");
  return jacobi_from_2f1(n, alpha, beta, x);
}

}  // namespace bc1
