#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bc1/specfun.hpp"

using namespace bc1;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.5, 0) == 1.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(0.5, 3) == Approx(15.0 / 8.0).epsilon(1e-15));
  CHECK(pochhammer(Complex(1.0, 1.0), 2) == Complex(1.0, 1.0) * Complex(2.0, 1.0));
}

TEST_CASE("gamma_real values and errors") {
  CHECK(gamma_real(5.0) == Approx(24.0).epsilon(1e-14));
  CHECK(gamma_real(0.5) == Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_real(1.5) == Approx(std::sqrt(kPi) / 2).epsilon(1e-14));
  CHECK(gamma_real(-0.5) == Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_real(0.0), PoleError);
  CHECK_THROWS_AS(gamma_real(-3.0), PoleError);
  CHECK_THROWS_AS(gamma_real(172.0), OverflowError);
}

TEST_CASE("gamma_real against std::tgamma on [1e-3, 170]") {
  for (double x = 1e-3; x < 170.0; x *= 1.37) {
    CAPTURE(x);
    CHECK(std::abs(gamma_real(x) / std::tgamma(x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("gamma recurrence on a log grid") {
  for (double x = 0.1; x <= 50.0; x *= 1.21) {
    CAPTURE(x);
    CHECK(std::abs(gamma_real(x + 1.0) / (x * gamma_real(x)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("log_gamma_real") {
  CHECK(log_gamma_real(100.0) == Approx(std::lgamma(100.0)).epsilon(1e-14));
  CHECK(log_gamma_real(0.25) == Approx(std::lgamma(0.25)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma_real(-1.0), ParameterError);
}

TEST_CASE("gamma_complex") {
  CHECK(rel(gamma_complex({1.0, 0.0}), 1.0) <= 1e-14);
  const Complex z(2.0, 3.0);
  CHECK(rel(gamma_complex(std::conj(z)), std::conj(gamma_complex(z))) <= 1e-14);
  // |Gamma(i nu)|^2 = pi / (nu sinh(pi nu))
  for (double nu : {0.3, 1.0, 4.0, 25.0}) {
    CAPTURE(nu);
    const double lhs = std::norm(gamma_complex({0.0, nu}));
    CHECK(std::abs(lhs / (kPi / (nu * std::sinh(kPi * nu))) - 1.0) <= 1e-10);
  }
  // recurrence off the real axis
  for (double r = -7.5; r < 40.0; r += 3.3) {
    const Complex w(r, 2.7);
    CAPTURE(r);
    CHECK(rel(gamma_complex(w + 1.0), w * gamma_complex(w)) <= 1e-11);
  }
  CHECK_THROWS_AS(gamma_complex({-2.0, 0.0}), PoleError);
}

TEST_CASE("log_gamma for large imaginary part") {
  // Stirling: log|Gamma(1/2 + i y)| = log sqrt(pi / cosh(pi y))
  const double y = 120.0;
  const double expected = 0.5 * (std::log(kPi) - (kPi * y + std::log1p(std::exp(-2 * kPi * y)) - std::log(2.0)));
  CHECK(std::real(log_gamma({0.5, y})) == Approx(expected).epsilon(1e-12));
  CHECK(std::real(log_gamma({-0.5, -y})) == Approx(expected - std::log(std::abs(Complex(-0.5, -y)))).epsilon(1e-12));
}

TEST_CASE("hyp_terminating") {
  HypSpec none{{0.0, 2.0}, {3.0}};
  CHECK(hyp_terminating(none, 1.0) == Complex(1.0));
  HypSpec two{{-1.0, 2.5}, {4.0}};
  CHECK(std::abs(hyp_terminating(two, 1.0) - (1.0 - 2.5 / 4.0)) <= 1e-15);
  HypSpec infinite{{0.5, 2.0}, {3.0}};
  CHECK_THROWS_AS(hyp_terminating(infinite, 1.0), ParameterError);
  HypSpec degenerate{{-3.0, 1.0}, {-1.0}};
  CHECK_THROWS_AS(hyp_terminating(degenerate, 1.0), DegeneracyError);
}

TEST_CASE("hyp_terminating 4F3 against term-by-term oracle") {
  // n = 1, x = rho at (b, iota, sigma) = (1, 1, 6): sigma0 = 3, delta0 = 1
  const double s0 = 3.0, d0 = 1.0, h = 2.0, rho = 2.0;
  HypSpec spec{{-1.0, 1.0 + s0 + d0 + 1.0, h + rho / 2, h - rho / 2}, {s0 + 1.0, 3.0, 3.0}};
  const double oracle = 1.0 + (-1.0) * 6.0 * 3.0 * 1.0 / (4.0 * 3.0 * 3.0);
  CHECK(std::abs(hyp_terminating(spec, 1.0) - oracle) <= 1e-15);
}

TEST_CASE("hyp_terminating is invariant under parameter permutation") {
  const std::vector<Rational> up{Rational(-4), Rational(7, 2), Rational(1, 3), Rational(5)};
  const std::vector<Rational> lo{Rational(9, 4), Rational(2), Rational(11, 3)};
  const Rational base = hyp_terminating_sum<Rational>(up, lo, 4, Rational(1));
  std::vector<Rational> up2{up[3], up[1], up[0], up[2]};
  std::vector<Rational> lo2{lo[2], lo[0], lo[1]};
  CHECK(hyp_terminating_sum<Rational>(up2, lo2, 4, Rational(1)) == base);
}

TEST_CASE("gauss_2f1 classical values") {
  CHECK(gauss_2f1(0.3, 1.7, 2.2, 0.0) == Complex(1.0));
  CHECK(std::abs(gauss_2f1(1.0, 1.0, 2.0, -1.0) - std::log(2.0)) <= 1e-14);
  // 2F1(1,1;2;x) = log(1-x)/(-x) far out
  CHECK(rel(gauss_2f1(1.0, 1.0, 2.0, -1e6), std::log1p(1e6) / 1e6) <= 1e-12);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 0.5), ParameterError);
  CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, -2.0, -0.5), DegeneracyError);
}

TEST_CASE("gauss_2f1 against frozen reference values") {
  CHECK(rel(gauss_2f1({0.75, 0.5}, {1.25, -0.5}, 2.0, -30.0), {0.046073981394177606, -0.055736573562430744}) <= 1e-12);
  CHECK(rel(gauss_2f1(1.5, 2.5, 3.5, -1e8), 2.4999993197384331e-12) <= 1e-10);
  CHECK(rel(gauss_2f1(0.3, 0.7, 1.9, -0.5), 0.95312243674087473) <= 1e-14);
}

TEST_CASE("Pfaff path agrees with the direct series") {
  for (double x : {-0.5, -0.25, -0.9}) {
    const Complex a(0.4, 1.1), b(0.9, -1.1), c(2.0, 0.0);
    CAPTURE(x);
    CHECK(rel(gauss_2f1(a, b, c, x), gauss_2f1_series(a, b, c, x)) <= 1e-12);
  }
}

TEST_CASE("gauss_2f1_deriv") {
  const Complex a(0.6, 0.8), b(1.4, -0.8), c(2.5, 0.0);
  CHECK(rel(gauss_2f1_deriv(a, b, c, 0.0), a * b / c) <= 1e-15);
  for (double x : {0.0, -0.4, -7.0}) CHECK(rel(gauss_2f1_deriv(-1.0, 3.0, 5.0, x), -3.0 / 5.0) <= 1e-14);
  const double x = -0.8, h = 1e-5;
  const Complex fd = (gauss_2f1(a, b, c, x + h) - gauss_2f1(a, b, c, x - h)) / (2 * h);
  CHECK(rel(gauss_2f1_deriv(a, b, c, x), fd) <= 1e-6);
}

TEST_CASE("gauss_2f1 satisfies the hypergeometric equation on [-5, 0)") {
  const Complex a(1.0, 0.7), b(1.0, -0.7), c(1.5, 0.0);
  for (double x = -5.0; x < -0.05; x += 0.45) {
    const double h = 1e-4 * std::max(1.0, std::abs(x));
    const Complex F = gauss_2f1(a, b, c, x);
    const Complex dF = gauss_2f1_deriv(a, b, c, x);
    const Complex d2F = (gauss_2f1_deriv(a, b, c, x + h) - gauss_2f1_deriv(a, b, c, x - h)) / (2 * h);
    const Complex residual = x * (1 - x) * d2F + (c - (a + b + 1.0) * x) * dF - a * b * F;
    CAPTURE(x);
    CHECK(std::abs(residual) <= 1e-7 * std::abs(F));
  }
}

TEST_CASE("jacobi_poly") {
  CHECK(jacobi_poly(0, 0.3, 2.1, 0.77) == 1.0);
  CHECK(jacobi_poly(4, 1.5, 0.5, 1.0) == Approx(pochhammer(2.5, 4) / 24.0).epsilon(1e-14));
  CHECK(jacobi_poly(2, 0.0, 0.0, 0.4) == Approx(-0.26).epsilon(1e-14));
  CHECK_THROWS_AS(jacobi_poly(3, -2.0, 0.0, 0.1), DegeneracyError);
  CHECK(jacobi_poly(3, 0.0, 0.0, -0.4) == doctest::Approx(-jacobi_poly(3, 0.0, 0.0, 0.4)).epsilon(1e-15));
}

TEST_CASE("jacobi_poly three-term recurrence") {
  const double a = 3.0, b = 1.5;
  for (double x : {-0.9, -0.2, 0.35, 0.8}) {
    for (int n = 1; n < 12; ++n) {
      const double s = 2.0 * n + a + b;
      const double lhs = 2.0 * (n + 1) * (n + a + b + 1) * s * jacobi_poly(n + 1, a, b, x);
      const double r1 = (s + 1) * ((s + 2) * s * x + a * a - b * b) * jacobi_poly(n, a, b, x);
      const double r2 = 2.0 * (n + a) * (n + b) * (s + 2) * jacobi_poly(n - 1, a, b, x);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(std::abs(lhs - (r1 - r2)) <= 1e-10 * (std::abs(lhs) + std::abs(r1) + std::abs(r2)));
    }
  }
}
