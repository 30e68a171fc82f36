// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "bc1/rational.hpp"

namespace bc1 {

/// Even (+1) or odd (-1) member of the orthogonal system.
enum class Parity : int { even = 1, odd = -1 };

inline int sign(Parity p) { return static_cast<int>(p); }
inline int tanh_power(Parity p) { return p == Parity::even ? 0 : 1; }

/// Root multiplicities of BC1 together with the weight exponent sigma.
/// b is the multiplicity of 2e, iota twice the multiplicity of 4e.
template <class Scalar>
struct Multiplicities {
  Scalar b;
  Scalar iota;
  Scalar sigma;

  Scalar rho() const { return b + iota; }
  Scalar sigma0() const { return sigma - (iota + b + Scalar(1)); }
  Scalar delta0() const { return (iota - Scalar(1)) / Scalar(2) + b; }
  Scalar delta1() const { return delta0() + Scalar(1); }
  Scalar delta(Parity p) const { return p == Parity::even ? delta0() : delta1(); }
  /// (sigma - rho) / 2, the common base of the Bernstein-Sato factors.
  Scalar half_gap() const { return (sigma - rho()) / Scalar(2); }
  /// (sigma + 1 - iota) / 2
  Scalar shifted_half() const { return (sigma + Scalar(1) - iota) / Scalar(2); }

  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

/// Exact parameters for the rational engine. Requires b > 0, iota > 0 and
/// sigma > iota + b.
struct AlgebraParams : Multiplicities<Rational> {
  AlgebraParams(Rational b, Rational iota, Rational sigma);
};

/// Floating parameters for the numerical model. Requires b > 0, iota > 0 and
/// sigma > iota + b; transform-side operations additionally need
/// sigma > 2 (iota + b).
struct BC1Params : Multiplicities<double> {
  BC1Params(double b, double iota, double sigma);
  explicit BC1Params(const AlgebraParams& exact);

  bool transform_admissible() const { return sigma > 2.0 * (iota + b); }
  /// Throws ParameterError naming `operation` unless transform_admissible().
  void require_transform_domain(std::string_view operation) const;
};

}  // namespace bc1
