// SPDX-License-Identifier: Apache-2.0
#include "bc1/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bc1/exact_algebra.hpp"
#include "bc1/exact_suites.hpp"
#include "bc1/transform.hpp"

namespace bc1 {
namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// "a:b:step" (inclusive), "x,y,z" or a single number.
std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw UsageError("empty grid");
  std::vector<std::string> parts;
  std::string part;
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("grid '" + text + "' must be start:stop:step");
    const double a = parse_real(parts[0]);
    const double b = parse_real(parts[1]);
    const double h = parse_real(parts[2]);
    if (!(h > 0.0) || b < a) throw UsageError("grid '" + text + "' needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((b - a) / h + 1e-9)) + 1;
    if (count > 10000000) throw UsageError("grid '" + text + "' is too large");
    std::vector<double> out;
    for (long i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * h);
    return out;
  }
  std::vector<double> out;
  std::stringstream ss(text);
  while (std::getline(ss, part, ',')) out.push_back(parse_real(part));
  return out;
}

Parity parse_parity(const std::string& text) {
  if (text == "+1" || text == "1" || text == "even" || text == "+") return Parity::even;
  if (text == "-1" || text == "odd" || text == "-") return Parity::odd;
  throw UsageError("parity must be +1 or -1, got '" + text + "'");
}

struct ParamArgs {
  std::string b = "1";
  std::string iota = "1";
  std::string sigma = "6";

  BC1Params numeric() const { return BC1Params(parse_real(b), parse_real(iota), parse_real(sigma)); }
  AlgebraParams exact() const {
    for (const std::string* s : {&b, &iota, &sigma}) {
      if (!is_rational_literal(*s)) throw UsageError("exact computation needs rational parameters, got '" + *s + "'");
    }
    return AlgebraParams(parse_rational(b), parse_rational(iota), parse_rational(sigma));
  }
};

void add_param_options(CLI::App* cmd, ParamArgs& p) {
  cmd->add_option("--b", p.b, "multiplicity of 2e (rational p/q or decimal)")->capture_default_str();
  cmd->add_option("--iota", p.iota, "twice the multiplicity of 4e")->capture_default_str();
  cmd->add_option("--sigma", p.sigma, "weight exponent")->capture_default_str();
}

QuadConfig quad_config(std::optional<double> tol) {
  QuadConfig cfg;
  if (const char* env = std::getenv("BC1_TOL")) cfg.tolerance = parse_real(env);
  if (tol) cfg.tolerance = *tol;
  if (!(cfg.tolerance > 0.0)) throw UsageError("quadrature tolerance must be positive");
  return cfg;
}

void require_transform(const BC1Params& p) {
  if (!p.transform_admissible()) {
    throw UsageError("transform-side operations need sigma > 2(iota + b); got sigma=" + fmt(p.sigma) +
                     ", 2(iota+b)=" + fmt(2.0 * (p.iota + p.b)));
  }
}

/// Writes to --out when given, else to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct Options {
  ParamArgs params;
  std::string out;
  std::string report;
  std::optional<double> tol;
  bool no_timing = false;

  // eval / transform / gram
  std::string what = "q";
  int n = 0;
  int k = 0;
  int m = 0;
  std::string parity = "+1";
  std::string t_grid = "0:2:0.1";
  std::string nu_grid = "0.25,0.5,1,2,4";
  double nu = 1.0;
  std::string method = "both";

  // gram / verify
  int n_max = 4;
  int k_max = 2;
  int m_max = 6;
  std::string suite = "all";
  std::string t_check = "0.1:2:0.1";
};

int cmd_eval(const Options& o, std::ostream& out) {
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  if (o.what == "span") {
    const AlgebraParams p = o.params.exact();
    if (o.n < 0 || o.k < 0) throw UsageError("n and k must be non-negative");
    os << to_json(direct_q_span(p, o.n, o.k, parse_parity(o.parity))).dump() << "\n";
    return kExitPass;
  }
  const BC1Params p = o.params.numeric();
  if (o.what == "q") {
    const QSpec spec{o.n, o.k, parse_parity(o.parity)};
    os << "t,q\n";
    for (double t : parse_grid(o.t_grid)) os << fmt(t) << "," << fmt(q_eval(p, spec, t)) << "\n";
  } else if (o.what == "G") {
    const Complex lambda(0.0, o.nu);
    os << "t,re,im\n";
    for (double t : parse_grid(o.t_grid)) {
      const Complex g = eigenfunction_G(p, lambda, t);
      os << fmt(t) << "," << fmt(g.real()) << "," << fmt(g.imag()) << "\n";
    }
  } else if (o.what == "wtilde") {
    require_transform(p);
    os << "nu,re,im\n";
    for (double nu : parse_grid(o.nu_grid)) {
      const Complex w = w_tilde(p, Complex(0.0, nu));
      os << fmt(nu) << "," << fmt(w.real()) << "," << fmt(w.imag()) << "\n";
    }
  } else if (o.what == "mu") {
    os << "t,mu\n";
    for (double t : parse_grid(o.t_grid)) os << fmt(t) << "," << fmt(mu_density(p, t)) << "\n";
  } else if (o.what == "weight") {
    os << "t,w\n";
    for (double t : parse_grid(o.t_grid)) os << fmt(t) << "," << fmt(weight_eval(p, o.m, o.k, t)) << "\n";
  } else {
    throw UsageError("--what must be one of q, G, wtilde, mu, weight, span");
  }
  return kExitPass;
}

int cmd_spectral_density(const Options& o, std::ostream& out) {
  const BC1Params p = o.params.numeric();
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  os << "nu,muhat,c_re,c_im\n";
  for (double nu : parse_grid(o.nu_grid)) {
    const SpectralPoint point(nu);
    const Complex c = c_function(p, point.lambda());
    os << fmt(nu) << "," << fmt(muhat_density(p, point)) << "," << fmt(c.real()) << "," << fmt(c.imag()) << "\n";
  }
  return kExitPass;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const BC1Params p = o.params.numeric();
  require_transform(p);
  if (o.method != "closed" && o.method != "quad" && o.method != "both") {
    throw UsageError("--method must be closed, quad or both");
  }
  const QSpec spec{o.n, o.k, parse_parity(o.parity)};
  const QuadConfig cfg = quad_config(o.tol);
  const std::vector<double> grid = parse_grid(o.nu_grid);
  const bool closed = o.method != "quad";
  const bool quad = o.method != "closed";
  std::vector<TransformValue> closed_values(grid.size());
  std::vector<TransformValue> quad_values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const SpectralPoint point(grid[i]);
    if (closed) closed_values[i] = closed_transform(p, spec, point);
    if (quad) quad_values[i] = forward_transform(p, [&](double t) { return q_eval(p, spec, t); }, point, cfg);
  });
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  os << "nu";
  if (closed) os << ",closed_plus_re,closed_plus_im,closed_minus_re,closed_minus_im";
  if (quad) os << ",quad_plus_re,quad_plus_im,quad_minus_re,quad_minus_im";
  os << "\n";
  auto put = [&](const TransformValue& v) {
    os << "," << fmt(v.plus.real()) << "," << fmt(v.plus.imag()) << "," << fmt(v.minus.real()) << ","
       << fmt(v.minus.imag());
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << fmt(grid[i]);
    if (closed) put(closed_values[i]);
    if (quad) put(quad_values[i]);
    os << "\n";
  }
  return kExitPass;
}

void emit_reports(const Options& o, std::vector<VerificationReport>& reports, std::ostream& err) {
  nlohmann::json all = nlohmann::json::array();
  for (auto& r : reports) {
    if (o.no_timing) r.seconds = 0.0;
    all.push_back(to_json(r));
  }
  if (o.report.empty()) {
    err << all.dump(2) << "\n";
    return;
  }
  Sink sink(o.report, err);
  *sink << all.dump(2) << "\n";
}

int cmd_gram(const Options& o, std::ostream& out, std::ostream& err) {
  const BC1Params p = o.params.numeric();
  if (o.n_max < 0 || o.k < 0) throw UsageError("--n-max and --k must be non-negative");
  const Parity parity = parse_parity(o.parity);
  const QuadConfig cfg = quad_config(o.tol);
  const GramResult g = gram_matrix(p, o.n_max, o.k, parity, cfg);
  {
    Sink sink(o.out, out);
    std::ostream& os = *sink;
    os << "i";
    for (int j = 0; j <= o.n_max; ++j) os << "," << j;
    os << "\n";
    for (int i = 0; i <= o.n_max; ++i) {
      os << i;
      for (int j = 0; j <= o.n_max; ++j) os << "," << fmt(g.gram(i, j));
      os << "\n";
    }
  }
  VerificationReport r;
  r.test = "gram";
  r.params = params_json(p);
  r.tolerance = 1e-8;
  r.max_rel_dev = std::max(g.max_offdiag_rel, g.max_diag_rel);
  r.max_abs_dev = (g.gram.diagonal() - g.closed_diagonal).cwiseAbs().maxCoeff();
  r.pass = r.max_rel_dev <= r.tolerance;
  std::vector<double> diagonal(g.gram.rows());
  for (Eigen::Index i = 0; i < g.gram.rows(); ++i) diagonal[i] = g.gram(i, i);
  r.details = {{"k", o.k},
               {"parity", sign(parity)},
               {"max_offdiag_rel", g.max_offdiag_rel},
               {"max_diag_rel", g.max_diag_rel},
               {"diagonal", diagonal},
               {"closed_diagonal",
                std::vector<double>(g.closed_diagonal.data(), g.closed_diagonal.data() + o.n_max + 1)}};
  std::vector<VerificationReport> reports{r};
  emit_reports(o, reports, err);
  return r.pass ? kExitPass : kExitFailure;
}

std::vector<VerificationReport> transform_suite(const BC1Params& p, const Options& o, const QuadConfig& cfg) {
  const std::vector<double> grid = parse_grid(o.nu_grid);
  std::vector<QSpec> odd;
  for (int k = 1; k <= o.k_max; ++k)
    for (int n = 0; n <= o.n_max; ++n) odd.push_back({n, k, Parity::odd});
  const DeltaResolution resolution = resolve_odd_delta(p, odd, grid, cfg);
  std::vector<VerificationReport> out;
  for (int k = 0; k <= o.k_max; ++k) {
    for (int n = 0; n <= o.n_max; ++n) {
      for (Parity parity : {Parity::even, Parity::odd}) {
        VerificationReport r = verify_transform(p, {n, k, parity}, grid, cfg, resolution.chosen);
        if (parity == Parity::odd && k > 0) {
          r.details["delta_switch"] = {{"chosen", resolution.chosen == OddDelta::delta0 ? "delta0" : "delta1"},
                                       {"max_rel_dev_delta0", resolution.deviation_delta0},
                                       {"max_rel_dev_delta1", resolution.deviation_delta1}};
        }
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kSuites = {"bernstein", "rodrigues", "eigen", "gram",
                                                   "wtilde",    "transform", "plancherel"};
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), o.suite) != kSuites.end()) {
    suites = {o.suite};
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  if (o.n_max < 0 || o.k_max < 0 || o.m_max < 0) throw UsageError("bounds must be non-negative");
  auto needs = [&](std::initializer_list<const char*> names) {
    for (const char* n : names)
      if (std::find(suites.begin(), suites.end(), n) != suites.end()) return true;
    return false;
  };
  // validate everything before running anything
  std::optional<AlgebraParams> exact;
  if (needs({"bernstein", "rodrigues"})) exact = o.params.exact();
  const BC1Params p = exact ? BC1Params(*exact) : o.params.numeric();
  if (needs({"wtilde", "transform", "plancherel"})) require_transform(p);
  const QuadConfig cfg = quad_config(o.tol);

  std::vector<VerificationReport> reports;
  for (const std::string& s : suites) {
    if (s == "bernstein") {
      reports.push_back(verify_bernstein(*exact, o.m_max));
    } else if (s == "rodrigues") {
      reports.push_back(verify_rodrigues(*exact, o.n_max, o.k_max));
    } else if (s == "eigen") {
      reports.push_back(verify_eigen(p, {0.5, 1.0, 2.0}, parse_grid(o.t_check)));
    } else if (s == "gram") {
      reports.push_back(verify_gram(p, o.n_max, o.k_max, cfg));
    } else if (s == "wtilde") {
      reports.push_back(verify_wtilde(p, parse_grid(o.nu_grid), cfg));
    } else if (s == "transform") {
      for (auto& r : transform_suite(p, o, cfg)) reports.push_back(std::move(r));
    } else if (s == "plancherel") {
      for (int k = 0; k <= o.k_max; ++k)
        for (int n = 0; n <= o.n_max; ++n)
          for (Parity parity : {Parity::even, Parity::odd}) reports.push_back(plancherel_check(p, {n, k, parity}, cfg));
    }
  }
  bool pass = true;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    out << (r.pass ? "PASS " : "FAIL ") << r.test;
    if (r.details.contains("spec")) {
      const auto& s = r.details["spec"];
      out << " n=" << s["n"].get<int>() << " k=" << s["k"].get<int>() << " parity=" << s["parity"].get<int>();
    }
    out << " max_rel_dev=" << fmt(r.max_rel_dev) << " tol=" << fmt(r.tolerance) << "\n";
  }
  emit_reports(o, reports, err);
  return pass ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"BC1 Cherednik-Opdam toolkit: exact identities, special functions and transforms"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd) {
    add_param_options(cmd, o.params);
    cmd->add_option("--quad-tol", o.tol, "quadrature target tolerance (overrides BC1_TOL)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate model functions on a grid (CSV)");
  common(eval);
  eval->add_option("--what", o.what, "q | G | wtilde | mu | weight | span")->capture_default_str();
  eval->add_option("--n", o.n, "degree index")->capture_default_str();
  eval->add_option("--k", o.k, "tanh-power index")->capture_default_str();
  eval->add_option("--m", o.m, "weight shift (weight only)")->capture_default_str();
  eval->add_option("--parity", o.parity, "+1 or -1")->capture_default_str();
  eval->add_option("--t", o.t_grid, "t grid, start:stop:step or list")->capture_default_str();
  eval->add_option("--nu", o.nu_grid, "nu grid for wtilde")->capture_default_str();
  eval->add_option("--lambda-nu", o.nu, "lambda = i*nu for G")->capture_default_str();
  eval->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* gram = app.add_subcommand("gram", "Gram matrix CSV plus closed-norm comparison JSON");
  common(gram);
  gram->add_option("--n-max", o.n_max, "largest degree")->capture_default_str();
  gram->add_option("--k", o.k, "tanh-power index")->capture_default_str();
  gram->add_option("--parity", o.parity, "+1 or -1")->capture_default_str();
  gram->add_option("--out", o.out, "CSV file (default stdout)");
  gram->add_option("--report", o.report, "JSON report file (default stderr)");
  gram->add_flag("--no-timing", o.no_timing, "write seconds as 0 for byte-stable reports");

  CLI::App* transform = app.add_subcommand("transform", "closed-form and quadrature transforms of Q (CSV)");
  common(transform);
  transform->add_option("--n", o.n, "degree index")->capture_default_str();
  transform->add_option("--k", o.k, "tanh-power index")->capture_default_str();
  transform->add_option("--parity", o.parity, "+1 or -1")->capture_default_str();
  transform->add_option("--nu", o.nu_grid, "nu grid")->capture_default_str();
  transform->add_option("--method", o.method, "closed | quad | both")->capture_default_str();
  transform->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("suite", o.suite, "bernstein | rodrigues | eigen | gram | wtilde | transform | plancherel | all")
      ->capture_default_str();
  verify->add_option("--n-max", o.n_max, "largest degree n")->capture_default_str();
  verify->add_option("--k-max", o.k_max, "largest tanh-power index k")->capture_default_str();
  verify->add_option("--m-max", o.m_max, "largest shift m for bernstein")->capture_default_str();
  verify->add_option("--nu", o.nu_grid, "spectral grid")->capture_default_str();
  verify->add_option("--t", o.t_check, "t grid for eigen")->capture_default_str();
  verify->add_option("--report", o.report, "JSON report file (default stderr)");
  verify->add_flag("--no-timing", o.no_timing, "write seconds as 0 for byte-stable reports");

  CLI::App* density = app.add_subcommand("spectral-density", "muhat density and c-function on a nu grid (CSV)");
  common(density);
  density->add_option("--nu", o.nu_grid, "nu grid")->capture_default_str();
  density->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (gram->parsed()) return cmd_gram(o, out, err);
    if (transform->parsed()) return cmd_transform(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (density->parsed()) return cmd_spectral_density(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bc1
