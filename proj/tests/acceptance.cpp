// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bc1/exact_suites.hpp"
#include "bc1/specfun.hpp"
#include "bc1/transform.hpp"

using namespace bc1;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
};

const std::vector<double> kNuGrid = {0.25, 0.5, 1.0, 2.0, 4.0};

std::vector<AlgebraParams> exact_grid() {
  return {AlgebraParams(Rational(1), Rational(1), Rational(6)), AlgebraParams(Rational(1, 2), Rational(2), Rational(8)),
          AlgebraParams(Rational(2), Rational(1, 2), Rational(13, 2)),
          AlgebraParams(Rational(3, 2), Rational(1), Rational(7)),
          AlgebraParams(Rational(1, 3), Rational(5, 2), Rational(11, 2))};
}

BC1Params reference() { return BC1Params(1.0, 1.0, 6.0); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome exact_suite(const std::function<VerificationReport(const AlgebraParams&)>& run) {
  Outcome o;
  long checked = 0, failed = 0;
  for (const auto& p : exact_grid()) {
    const auto r = run(p);
    o.pass = o.pass && r.pass;
    checked += r.details.value("identities_checked", 0L);
    failed += r.details.value("identities_failed", 0L);
  }
  o.summary = std::to_string(checked) + " identities, " + std::to_string(failed) + " failed, 5 parameter triples";
  return o;
}

Outcome a1() {
  return exact_suite([](const AlgebraParams& p) { return verify_bernstein(p, 6); });
}

Outcome a2() {
  return exact_suite([](const AlgebraParams& p) { return verify_rodrigues(p, 6, 3); });
}

Outcome a3() {
  std::vector<double> t;
  for (int i = 0; i < 20; ++i) t.push_back(0.1 + 0.1 * i);
  const auto r = verify_eigen(reference(), {0.5, 1.0, 2.0}, t);
  return {r.pass, "max residual/(1+|G|) " + num(r.max_rel_dev) + " (tol 1e-6)"};
}

Outcome a4() {
  const BC1Params p = reference();
  const auto r = verify_gram(p, 5, 2);
  // frozen from an independent Simpson quadrature of Q_0^2 dmu
  const double even0 = gram_matrix(p, 0, 0, Parity::even).gram(0, 0);
  const double odd0 = gram_matrix(p, 0, 0, Parity::odd).gram(0, 0);
  const double dev0 = std::max(std::abs(even0 / 0.8 - 1.0), std::abs(odd0 / (4.0 / 15.0) - 1.0));
  Outcome o;
  o.pass = r.pass && dev0 <= 1e-8;
  o.summary = "max rel dev " + num(r.max_rel_dev) + " (tol 1e-8); ||Q_0||^2 even " + num(even0) + ", odd " +
              num(odd0) + " (expected 4/5, 4/15)";
  return o;
}

Outcome a5() {
  const BC1Params p = reference();
  Outcome o;
  double worst = 0.0;
  int specs = 0;
  std::vector<QSpec> odd_k;
  for (int k = 0; k <= 2; ++k) {
    for (int n = 0; n <= 4; ++n) {
      for (Parity parity : {Parity::even, Parity::odd}) {
        const QSpec spec{n, k, parity};
        const auto r = verify_transform(p, spec, kNuGrid);
        o.pass = o.pass && r.pass;
        worst = std::max(worst, r.max_rel_dev);
        ++specs;
        if (parity == Parity::odd && k > 0) odd_k.push_back(spec);
      }
    }
  }
  const auto w = verify_wtilde(p, kNuGrid);
  const double w0 = w_tilde(p, Complex(0.0)).real();
  // frozen from quadrature of w_6 against G(0, .) dmu
  const bool w0_ok = std::abs(w0 - 4.0) <= 1e-8 * 4.0;
  const auto delta = resolve_odd_delta(p, odd_k, kNuGrid);
  o.pass = o.pass && w.pass && w0_ok && delta.chosen == OddDelta::delta1;
  o.summary = std::to_string(specs) + " transforms, max rel dev " + num(worst) + " (tol 1e-6); wtilde dev " +
              num(w.max_rel_dev) + ", wtilde(0) " + num(w0) + "; odd shift " +
              (delta.chosen == OddDelta::delta1 ? "delta1" : "delta0") + " (delta0 dev " +
              num(delta.deviation_delta0) + ", delta1 dev " + num(delta.deviation_delta1) + ")";
  return o;
}

Outcome a6() {
  const BC1Params p = reference();
  QuadConfig cfg;
  cfg.spectral_cutoff = 40.0;
  Outcome o;
  double worst = 0.0, cal_lo = 1e300, cal_hi = -1e300;
  for (int k = 0; k <= 1; ++k) {
    for (int n = 0; n <= 2; ++n) {
      for (Parity parity : {Parity::even, Parity::odd}) {
        const auto r = plancherel_check(p, QSpec{n, k, parity}, cfg);
        o.pass = o.pass && r.pass;
        worst = std::max(worst, r.max_rel_dev);
        const double cal = r.details.value("calibration", 0.0);
        cal_lo = std::min(cal_lo, cal);
        cal_hi = std::max(cal_hi, cal);
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "calibration in [%.12f, %.12f]", cal_lo, cal_hi);
  o.summary = "12 norms, max rel dev " + num(worst) + " (tol 1e-4); " + buf;
  return o;
}

Outcome a7() {
  Outcome o;
  double gamma_dev = 0.0;
  for (double x = 0.1; x <= 50.0; x *= 1.21) {
    gamma_dev = std::max(gamma_dev, std::abs(gamma_real(x + 1.0) / (x * gamma_real(x)) - 1.0));
  }

  double ode_dev = 0.0;
  const Complex a(1.0, 0.7), b(1.0, -0.7), c(1.5, 0.0);
  for (double x = -5.0; x < -0.05; x += 0.45) {
    const double h = 1e-4 * std::max(1.0, std::abs(x));
    const Complex F = gauss_2f1(a, b, c, x);
    const Complex dF = gauss_2f1_deriv(a, b, c, x);
    const Complex d2F = (gauss_2f1_deriv(a, b, c, x + h) - gauss_2f1_deriv(a, b, c, x - h)) / (2 * h);
    const Complex residual = x * (1 - x) * d2F + (c - (a + b + 1.0) * x) * dF - a * b * F;
    ode_dev = std::max(ode_dev, std::abs(residual) / std::abs(F));
  }

  double jacobi_dev = 0.0;
  const double ja = 3.0, jb = 1.5;
  for (double x : {-0.9, -0.2, 0.35, 0.8}) {
    for (int n = 1; n < 12; ++n) {
      const double s = 2.0 * n + ja + jb;
      const double lhs = 2.0 * (n + 1) * (n + ja + jb + 1) * s * jacobi_poly(n + 1, ja, jb, x);
      const double r1 = (s + 1) * ((s + 2) * s * x + ja * ja - jb * jb) * jacobi_poly(n, ja, jb, x);
      const double r2 = 2.0 * (n + ja) * (n + jb) * (s + 2) * jacobi_poly(n - 1, ja, jb, x);
      jacobi_dev = std::max(jacobi_dev, std::abs(lhs - (r1 - r2)) / (std::abs(lhs) + std::abs(r1) + std::abs(r2)));
    }
  }

  double pfaff_dev = 0.0;
  const Complex pa(0.4, 1.1), pb(0.9, -1.1), pc(2.0, 0.0);
  for (double x : {-0.9, -0.5, -0.25}) {
    const Complex direct = gauss_2f1_series(pa, pb, pc, x);
    pfaff_dev = std::max(pfaff_dev, std::abs(gauss_2f1(pa, pb, pc, x) - direct) / std::abs(direct));
  }

  const std::vector<Rational> up{Rational(-4), Rational(7, 2), Rational(1, 3), Rational(5)};
  const std::vector<Rational> lo{Rational(9, 4), Rational(2), Rational(11, 3)};
  const bool perm_ok = hyp_terminating_sum<Rational>(up, lo, 4, Rational(1)) ==
                       hyp_terminating_sum<Rational>({up[3], up[1], up[0], up[2]}, {lo[2], lo[0], lo[1]}, 4, Rational(1));

  o.pass = gamma_dev <= 1e-12 && ode_dev <= 1e-7 && jacobi_dev <= 1e-10 && pfaff_dev <= 1e-12 && perm_ok;
  o.summary = "gamma " + num(gamma_dev) + ", ode " + num(ode_dev) + ", jacobi " + num(jacobi_dev) + ", pfaff " +
              num(pfaff_dev) + ", permutation " + (perm_ok ? "exact" : "broken");
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"A1", "exact Bernstein-Sato identities", 10.0, a1},
      {"A2", "exact Rodrigues identities", 60.0, a2},
      {"A3", "eigen-equation residual", 5.0, a3},
      {"A4", "orthogonality and norms", 60.0, a4},
      {"A5", "transform closed forms", 300.0, a5},
      {"A6", "Plancherel identity", 300.0, a6},
      {"A7", "special-function invariants", 5.0, a7},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s %s %s: %s; %.2fs (limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title, o.summary.c_str(),
                seconds, c.budget_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
