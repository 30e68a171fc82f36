// SPDX-License-Identifier: Apache-2.0
#include "bc1/exact_suites.hpp"

#include <algorithm>
#include <chrono>

#include "bc1/exact_algebra.hpp"

namespace bc1 {
namespace {

using Clock = std::chrono::steady_clock;

double max_coefficient(const SigmaSpan& f) {
  double out = 0.0;
  for (const auto& [key, c] : f.terms()) out = std::max(out, std::abs(to_double(c)));
  return out;
}

struct Tally {
  double max_dev = 0.0;
  int checked = 0;
  int failed = 0;
  nlohmann::json failures = nlohmann::json::array();

  void record(const SigmaSpan& lhs, const SigmaSpan& rhs, nlohmann::json label) {
    ++checked;
    const SigmaSpan diff = lhs - rhs;
    if (diff.is_zero()) return;
    ++failed;
    const double dev = max_coefficient(diff);
    max_dev = std::max(max_dev, dev);
    label["deviation"] = dev;
    failures.push_back(std::move(label));
  }

  void finish(VerificationReport& r, double scale, Clock::time_point start) const {
    r.max_abs_dev = max_dev;
    r.max_rel_dev = scale > 0.0 ? max_dev / scale : max_dev;
    r.tolerance = 0.0;
    r.pass = failed == 0;
    r.details = {{"identities_checked", checked}, {"identities_failed", failed}};
    if (failed > 0) r.details["failures"] = failures;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
};

}  // namespace

nlohmann::json params_json(const AlgebraParams& p) {
  return {{"b", to_string(p.b)}, {"iota", to_string(p.iota)}, {"sigma", to_string(p.sigma)}};
}

VerificationReport verify_bernstein(const AlgebraParams& p, int m_max) {
  const auto start = Clock::now();
  VerificationReport r;
  r.test = "bernstein";
  r.params = params_json(p);
  Tally tally;
  double scale = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    const IdentityCheck even = bernstein_even(p, m);
    const IdentityCheck odd = bernstein_odd(p, m);
    scale = std::max({scale, max_coefficient(even.rhs), max_coefficient(odd.rhs)});
    tally.record(even.lhs, even.rhs, {{"identity", "even"}, {"m", m}});
    tally.record(odd.lhs, odd.rhs, {{"identity", "odd"}, {"m", m}});
  }
  tally.finish(r, scale, start);
  return r;
}

VerificationReport verify_rodrigues(const AlgebraParams& p, int n_max, int k_max, int weighted_m_max) {
  const auto start = Clock::now();
  VerificationReport r;
  r.test = "rodrigues";
  r.params = params_json(p);
  Tally tally;
  double scale = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      for (int m = 0; m <= weighted_m_max; ++m) {
        const IdentityCheck w = bernstein_weighted(p, m, k, parity);
        tally.record(w.lhs, w.rhs, {{"identity", "weighted"}, {"m", m}, {"k", k}, {"parity", sign(parity)}});
      }
      for (int n = 0; n <= n_max; ++n) {
        const SigmaSpan direct = direct_q_span(p, n, k, parity);
        scale = std::max(scale, max_coefficient(direct));
        tally.record(rodrigues_span(p, n, k, parity), direct,
                     {{"identity", "rodrigues"}, {"n", n}, {"k", k}, {"parity", sign(parity)}});
      }
    }
  }
  tally.finish(r, scale, start);
  return r;
}

}  // namespace bc1
