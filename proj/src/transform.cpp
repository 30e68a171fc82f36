// SPDX-License-Identifier: Apache-2.0
#include "bc1/transform.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace bc1 {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json spec_json(const QSpec& spec) {
  return {{"n", spec.n}, {"k", spec.k}, {"parity", sign(spec.parity)}};
}

const char* delta_name(OddDelta d) { return d == OddDelta::delta0 ? "delta0" : "delta1"; }

RealFunction q_function(const BC1Params& p, const QSpec& spec) {
  return [p, spec](double t) { return q_eval(p, spec, t); };
}

/// Transform at an arbitrary complex lambda.
TransformValue transform_at(const BC1Params& p, const RealFunction& f, Complex lambda, const QuadConfig& cfg) {
  auto integrand = [&](double t) {
    Eigen::Vector2cd v;
    const double weight = f(t) * mu_density(p, t);
    if (weight == 0.0) return Eigen::Vector2cd::Zero().eval();
    v(0) = weight * eigenfunction_G(p, lambda, -t);
    v(1) = weight * eigenfunction_G(p, -lambda, -t);
    return v;
  };
  const auto r = integrate_symmetric<Eigen::Vector2cd>(integrand, cfg);
  return {r.value(0), r.value(1)};
}

double relative(double abs_dev, double reference) {
  return reference > 0.0 ? abs_dev / reference : abs_dev;
}

}  // namespace

nlohmann::json params_json(const BC1Params& p) {
  return {{"b", p.b}, {"iota", p.iota}, {"sigma", p.sigma}};
}

QuadResult<double> integrate_real_line(const BC1Params& p, const RealFunction& f, const QuadConfig& cfg) {
  return integrate_symmetric<double>([&](double t) { return f(t) * mu_density(p, t); }, cfg);
}

TransformValue forward_transform(const BC1Params& p, const RealFunction& f, const SpectralPoint& point,
                                 const QuadConfig& cfg) {
  return transform_at(p, f, point.lambda(), cfg);
}

double inner_product(const BC1Params& p, const RealFunction& f, const RealFunction& g, const QuadConfig& cfg) {
  return integrate_real_line(p, [&](double t) { return f(t) * g(t); }, cfg).value;
}

GramResult gram_matrix(const BC1Params& p, int n_max, int k, Parity parity, const QuadConfig& cfg) {
  if (n_max < 0 || k < 0) throw ParameterError("gram_matrix needs n_max, k >= 0");
  const auto size = static_cast<std::size_t>(n_max + 1);
  GramResult out;
  out.gram = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  out.closed_diagonal.resize(n_max + 1);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= n_max; ++i)
    for (int j = i; j <= n_max; ++j) pairs.emplace_back(i, j);
  std::vector<double> values(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    values[idx] = inner_product(p, q_function(p, {i, k, parity}), q_function(p, {j, k, parity}), cfg);
  });
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto [i, j] = pairs[idx];
    out.gram(i, j) = values[idx];
    out.gram(j, i) = values[idx];
  }
  for (std::size_t i = 0; i < size; ++i) {
    const int n = static_cast<int>(i);
    out.closed_diagonal(n) = q_norm_sq_closed(p, {n, k, parity});
    out.max_diag_rel = std::max(out.max_diag_rel, std::abs(out.gram(n, n) - out.closed_diagonal(n)) / out.closed_diagonal(n));
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j) continue;
      const int m = static_cast<int>(j);
      out.max_offdiag_rel =
          std::max(out.max_offdiag_rel, std::abs(out.gram(n, m)) / std::sqrt(out.gram(n, n) * out.gram(m, m)));
    }
  }
  return out;
}

SpectralNorm spectral_norm_sq(const BC1Params& p, const SpectralFunction& F, double cutoff, const QuadConfig& cfg) {
  auto integrand = [&](double nu) {
    if (nu <= 0.0) return 0.0;
    const SpectralPoint point(nu);
    const TransformValue v = F(point);
    return (std::norm(v.plus) + std::norm(v.minus)) * muhat_density(p, point);
  };
  SpectralNorm out;
  out.value = integrate_half_axis(integrand, cutoff, cfg).value;
  QuadConfig tail_cfg = cfg;
  tail_cfg.tolerance = std::max(cfg.tolerance, 1e-6);
  out.tail_estimate = integrate_half_axis([&](double s) { return integrand(cutoff + s); }, cutoff, tail_cfg).value;
  out.truncation_dominated = out.tail_estimate > cfg.tolerance * std::abs(out.value);
  return out;
}

VerificationReport plancherel_check(const BC1Params& p, const QSpec& spec, const QuadConfig& cfg) {
  const auto start = Clock::now();
  p.require_transform_domain("plancherel_check");
  VerificationReport r;
  r.test = "plancherel";
  r.params = params_json(p);
  r.tolerance = 1e-4;
  const SpectralNorm spectral = spectral_norm_sq(
      p, [&](const SpectralPoint& point) { return closed_transform(p, spec, point); }, cfg.spectral_cutoff, cfg);
  const double closed = q_norm_sq_closed(p, spec);
  r.max_abs_dev = std::abs(spectral.value - closed);
  r.max_rel_dev = relative(r.max_abs_dev, closed);
  r.pass = r.max_rel_dev <= r.tolerance;
  r.details = {{"spec", spec_json(spec)},
               {"spectral_norm_sq", spectral.value},
               {"closed_norm_sq", closed},
               {"calibration", spectral.value / closed},
               {"tail_estimate", spectral.tail_estimate},
               {"truncation_dominated", spectral.truncation_dominated},
               {"cutoff", cfg.spectral_cutoff}};
  r.seconds = elapsed(start);
  return r;
}

VerificationReport verify_transform(const BC1Params& p, const QSpec& spec, const std::vector<double>& nu_grid,
                                    const QuadConfig& cfg, OddDelta odd_delta) {
  const auto start = Clock::now();
  p.require_transform_domain("verify_transform");
  VerificationReport r;
  r.test = "transform";
  r.params = params_json(p);
  r.tolerance = 1e-6;
  std::vector<double> abs_dev(nu_grid.size());
  std::vector<double> magnitude(nu_grid.size());
  const RealFunction q = q_function(p, spec);
  parallel_for(nu_grid.size(), [&](std::size_t i) {
    const SpectralPoint point(nu_grid[i]);
    const TransformValue quad = forward_transform(p, q, point, cfg);
    const TransformValue closed = closed_transform(p, spec, point, odd_delta);
    abs_dev[i] = std::max(std::abs(quad.plus - closed.plus), std::abs(quad.minus - closed.minus));
    magnitude[i] = std::max(std::abs(closed.plus), std::abs(closed.minus));
  });
  // relative to the largest closed-form modulus on the grid
  double reference = 0.0;
  for (std::size_t i = 0; i < nu_grid.size(); ++i) {
    r.max_abs_dev = std::max(r.max_abs_dev, abs_dev[i]);
    reference = std::max(reference, magnitude[i]);
  }
  r.max_rel_dev = relative(r.max_abs_dev, reference);
  r.pass = r.max_rel_dev <= r.tolerance;
  r.details = {{"spec", spec_json(spec)}, {"nu", nu_grid}, {"reference_modulus", reference}};
  if (spec.parity == Parity::odd && spec.k > 0) r.details["odd_delta"] = delta_name(odd_delta);
  r.seconds = elapsed(start);
  return r;
}

DeltaResolution resolve_odd_delta(const BC1Params& p, const std::vector<QSpec>& odd_specs,
                                  const std::vector<double>& nu_grid, const QuadConfig& cfg) {
  DeltaResolution out;
  for (const QSpec& spec : odd_specs) {
    if (spec.parity != Parity::odd || spec.k == 0) continue;
    out.deviation_delta0 =
        std::max(out.deviation_delta0, verify_transform(p, spec, nu_grid, cfg, OddDelta::delta0).max_rel_dev);
    out.deviation_delta1 =
        std::max(out.deviation_delta1, verify_transform(p, spec, nu_grid, cfg, OddDelta::delta1).max_rel_dev);
  }
  out.chosen = out.deviation_delta0 < out.deviation_delta1 ? OddDelta::delta0 : OddDelta::delta1;
  return out;
}

VerificationReport verify_wtilde(const BC1Params& p, const std::vector<double>& nu_grid, const QuadConfig& cfg) {
  const auto start = Clock::now();
  p.require_transform_domain("verify_wtilde");
  VerificationReport r;
  r.test = "wtilde";
  r.params = params_json(p);
  r.tolerance = 1e-8;
  const RealFunction w = [&](double t) { return weight_eval(p, 0, 0, t); };
  std::vector<Complex> lambdas{Complex(0.0)};
  for (double nu : nu_grid) lambdas.emplace_back(0.0, nu);
  std::vector<double> abs_dev(lambdas.size());
  std::vector<double> rel_dev(lambdas.size());
  std::vector<double> closed_values(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    const TransformValue quad = transform_at(p, w, lambdas[i], cfg);
    const Complex closed = w_tilde(p, lambdas[i]);
    const double dev = std::max(std::abs(quad.plus - closed), std::abs(quad.minus - closed));
    abs_dev[i] = dev;
    rel_dev[i] = relative(dev, std::abs(closed));
    closed_values[i] = closed.real();
  });
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    r.max_abs_dev = std::max(r.max_abs_dev, abs_dev[i]);
    r.max_rel_dev = std::max(r.max_rel_dev, rel_dev[i]);
  }
  r.pass = r.max_rel_dev <= r.tolerance;
  r.details = {{"nu", nu_grid}, {"w_tilde_at_zero", closed_values.front()}};
  r.seconds = elapsed(start);
  return r;
}

double eigen_residual(const BC1Params& p, Complex lambda, double t) {
  constexpr double h = 1e-3;
  auto G = [&](double s) { return eigenfunction_G(p, lambda, s); };
  const Complex derivative = (-G(t + 2 * h) + 8.0 * G(t + h) - 8.0 * G(t - h) + G(t - 2 * h)) / (12.0 * h);
  const Complex g = G(t);
  const Complex reflected = g - G(-t);
  const double coefficient = 2.0 * p.iota / -std::expm1(-4.0 * t) + 2.0 * p.b / -std::expm1(-2.0 * t);
  const Complex Dg = derivative + coefficient * reflected - p.rho() * g;
  return std::abs(Dg - lambda * g);
}

VerificationReport verify_eigen(const BC1Params& p, const std::vector<double>& nu_grid,
                                const std::vector<double>& t_grid) {
  const auto start = Clock::now();
  VerificationReport r;
  r.test = "eigen";
  r.params = params_json(p);
  r.tolerance = 1e-6;
  for (double nu : nu_grid) {
    const Complex lambda(0.0, nu);
    for (double t : t_grid) {
      const double res = eigen_residual(p, lambda, t);
      r.max_abs_dev = std::max(r.max_abs_dev, res);
      r.max_rel_dev = std::max(r.max_rel_dev, res / (1.0 + std::abs(eigenfunction_G(p, lambda, t))));
    }
  }
  r.pass = r.max_rel_dev <= r.tolerance;
  r.details = {{"nu", nu_grid}, {"t", t_grid}};
  r.seconds = elapsed(start);
  return r;
}

VerificationReport verify_gram(const BC1Params& p, int n_max, int k_max, const QuadConfig& cfg) {
  const auto start = Clock::now();
  VerificationReport r;
  r.test = "gram";
  r.params = params_json(p);
  r.tolerance = 1e-8;
  nlohmann::json blocks = nlohmann::json::array();
  for (int k = 0; k <= k_max; ++k) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      const GramResult g = gram_matrix(p, n_max, k, parity, cfg);
      const double dev = std::max(g.max_offdiag_rel, g.max_diag_rel);
      r.max_rel_dev = std::max(r.max_rel_dev, dev);
      r.max_abs_dev = std::max(r.max_abs_dev, (g.gram.diagonal() - g.closed_diagonal).cwiseAbs().maxCoeff());
      blocks.push_back({{"k", k},
                        {"parity", sign(parity)},
                        {"max_offdiag_rel", g.max_offdiag_rel},
                        {"max_diag_rel", g.max_diag_rel},
                        {"diagonal0", g.gram(0, 0)}});
    }
  }
  r.pass = r.max_rel_dev <= r.tolerance;
  r.details = {{"n_max", n_max}, {"blocks", blocks}};
  r.seconds = elapsed(start);
  return r;
}

unsigned worker_count() {
  if (const char* env = std::getenv("BC1_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bc1
