// SPDX-License-Identifier: Apache-2.0
//
// Quadrature realisation of the Cherednik-Opdam transform and the numerical
// verification suites built on it.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bc1/model.hpp"
#include "bc1/quadrature.hpp"
#include "bc1/report.hpp"

namespace bc1 {

using RealFunction = std::function<double(double)>;
using SpectralFunction = std::function<TransformValue(const SpectralPoint&)>;

nlohmann::json params_json(const BC1Params& p);

/// int_R f dmu.
QuadResult<double> integrate_real_line(const BC1Params& p, const RealFunction& f, const QuadConfig& cfg = {});

/// (F_1 f(lambda), F_{-1} f(lambda)) with F_{+-1} f(lambda) = int f(t) G(+-lambda, -t) dmu(t).
TransformValue forward_transform(const BC1Params& p, const RealFunction& f, const SpectralPoint& point,
                                 const QuadConfig& cfg = {});

/// <f, g> in L2(R, dmu).
double inner_product(const BC1Params& p, const RealFunction& f, const RealFunction& g, const QuadConfig& cfg = {});

struct GramResult {
  Eigen::MatrixXd gram;
  Eigen::VectorXd closed_diagonal;
  double max_offdiag_rel = 0.0;  ///< max |G_ij| / sqrt(G_ii G_jj), i != j
  double max_diag_rel = 0.0;     ///< max |G_ii - closed_i| / closed_i
};

/// Gram matrix of Q^{(k)}_{0..n_max, parity} by quadrature.
GramResult gram_matrix(const BC1Params& p, int n_max, int k, Parity parity, const QuadConfig& cfg = {});

struct SpectralNorm {
  double value = 0.0;
  double tail_estimate = 0.0;  ///< integral over [Lambda, 2 Lambda]
  bool truncation_dominated = false;
};

/// int_0^Lambda (|F_1(i nu)|^2 + |F_{-1}(i nu)|^2) dmuhat(nu).
SpectralNorm spectral_norm_sq(const BC1Params& p, const SpectralFunction& F, double cutoff,
                              const QuadConfig& cfg = {});

/// ||F Q||^2 on the spectral side against the closed L2 norm; pass at 1e-4.
VerificationReport plancherel_check(const BC1Params& p, const QSpec& spec, const QuadConfig& cfg = {});

/// Quadrature transform of Q against closed_transform over nu_grid. The
/// relative deviation is taken against the largest closed-form modulus on the
/// grid; pass at 1e-6.
VerificationReport verify_transform(const BC1Params& p, const QSpec& spec, const std::vector<double>& nu_grid,
                                    const QuadConfig& cfg = {}, OddDelta odd_delta = OddDelta::delta1);

/// Which odd-case Pochhammer agrees with quadrature; smaller maximum
/// deviation over the given odd specs (k > 0) wins.
struct DeltaResolution {
  OddDelta chosen = OddDelta::delta1;
  double deviation_delta0 = 0.0;
  double deviation_delta1 = 0.0;
};
DeltaResolution resolve_odd_delta(const BC1Params& p, const std::vector<QSpec>& odd_specs,
                                  const std::vector<double>& nu_grid, const QuadConfig& cfg = {});

/// Quadrature transform of w_sigma against w_tilde at lambda = 0 and at i nu; pass at 1e-8.
VerificationReport verify_wtilde(const BC1Params& p, const std::vector<double>& nu_grid, const QuadConfig& cfg = {});

/// |D G(i nu, t) - i nu G(i nu, t)| with D applied by a five-point difference.
double eigen_residual(const BC1Params& p, Complex lambda, double t);

/// Max over nu_grid x t_grid of residual / (1 + |G|); pass at 1e-6.
VerificationReport verify_eigen(const BC1Params& p, const std::vector<double>& nu_grid,
                                const std::vector<double>& t_grid);

/// Gram matrices for n <= n_max, k <= k_max, both parities; pass at 1e-8.
VerificationReport verify_gram(const BC1Params& p, int n_max, int k_max, const QuadConfig& cfg = {});

/// Degree of parallelism: BC1_THREADS if set, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on worker_count() threads. Results must be
/// written to slot i so reductions stay in index order. The first exception
/// is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bc1
