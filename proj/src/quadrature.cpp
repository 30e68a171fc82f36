// SPDX-License-Identifier: Apache-2.0
#include "bc1/quadrature.hpp"

#include <array>
#include <vector>

namespace bc1 {
namespace {

using detail::kGaussNodes;
using detail::kGaussWeights;

struct Panel {
  double value;
  double abs_value;
};

Panel gauss_panel(const std::function<double(double)>& f, double a, double b, int& evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  double sa = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double fl = f(mid - half * kGaussNodes[i]);
    const double fr = f(mid + half * kGaussNodes[i]);
    s += kGaussWeights[i] * (fl + fr);
    sa += kGaussWeights[i] * (std::abs(fl) + std::abs(fr));
  }
  evaluations += 20;
  return {half * s, half * sa};
}

void adaptive(const std::function<double(double)>& f, double a, double b, Panel whole, int depth,
              const QuadConfig& cfg, double scale, QuadResult<double>& out) {
  const double mid = 0.5 * (a + b);
  const Panel left = gauss_panel(f, a, mid, out.evaluations);
  const Panel right = gauss_panel(f, mid, b, out.evaluations);
  const double refined = left.value + right.value;
  const double err = std::abs(refined - whole.value);
  const double floor = cfg.tolerance * std::max(scale, left.abs_value + right.abs_value);
  if (err <= floor || depth >= cfg.max_levels) {
    out.value += refined;
    out.abs_integral += left.abs_value + right.abs_value;
    out.error_estimate += err;
    return;
  }
  adaptive(f, a, mid, left, depth + 1, cfg, scale, out);
  adaptive(f, mid, b, right, depth + 1, cfg, scale, out);
}

}  // namespace

QuadResult<double> integrate_half_axis(const std::function<double(double)>& f, double upper,
                                       const QuadConfig& cfg) {
  QuadResult<double> out;
  if (!(upper > 0.0)) return out;
  // coarse pass fixes the error scale so panel decisions do not depend on order
  std::vector<Panel> coarse;
  double scale = 0.0;
  const int panels = static_cast<int>(std::ceil(upper));
  for (int i = 0; i < panels; ++i) {
    const double a = upper * i / panels;
    const double b = upper * (i + 1) / panels;
    coarse.push_back(gauss_panel(f, a, b, out.evaluations));
    scale += coarse.back().abs_value;
  }
  for (int i = 0; i < panels; ++i) {
    adaptive(f, upper * i / panels, upper * (i + 1) / panels, coarse[static_cast<std::size_t>(i)], 0, cfg, scale, out);
  }
  if (out.error_estimate > cfg.tolerance * std::max(scale, out.abs_integral) * panels) {
    throw ConvergenceError("spectral quadrature did not reach tolerance");
  }
  return out;
}

}  // namespace bc1
