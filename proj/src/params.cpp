// SPDX-License-Identifier: Apache-2.0
#include "bc1/params.hpp"

#include <cmath>
#include <string>

#include "bc1/errors.hpp"

namespace bc1 {
namespace {

template <class S>
void validate(const S& b, const S& iota, const S& sigma, const std::string& shown) {
  if (!(b > 0)) throw ParameterError("multiplicity b must be positive (" + shown + ")");
  if (!(iota > 0)) throw ParameterError("multiplicity iota must be positive (" + shown + ")");
  if (!(sigma > iota + b)) {
    throw ParameterError("sigma must exceed iota + b for L2 membership (" + shown + ")");
  }
}

}  // namespace

AlgebraParams::AlgebraParams(Rational b_, Rational iota_, Rational sigma_)
    : Multiplicities<Rational>{std::move(b_), std::move(iota_), std::move(sigma_)} {
  validate(b, iota, sigma,
           "b=" + to_string(b) + ", iota=" + to_string(iota) + ", sigma=" + to_string(sigma));
}

BC1Params::BC1Params(double b_, double iota_, double sigma_)
    : Multiplicities<double>{b_, iota_, sigma_} {
  if (!std::isfinite(b) || !std::isfinite(iota) || !std::isfinite(sigma)) {
    throw ParameterError("parameters must be finite");
  }
  validate(b, iota, sigma,
           "b=" + std::to_string(b) + ", iota=" + std::to_string(iota) +
               ", sigma=" + std::to_string(sigma));
}

BC1Params::BC1Params(const AlgebraParams& exact)
    : BC1Params(to_double(exact.b), to_double(exact.iota), to_double(exact.sigma)) {}

void BC1Params::require_transform_domain(std::string_view operation) const {
  if (!transform_admissible()) {
    throw ParameterError(std::string(operation) + " requires sigma > 2(iota + b); got sigma=" +
                         std::to_string(sigma) + ", 2(iota+b)=" + std::to_string(2 * (iota + b)));
  }
}

}  // namespace bc1
