// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <map>
#include <span>

#include <json.hpp>

#include "bc1/params.hpp"
#include "bc1/rational.hpp"

namespace bc1 {

/// Monomial cosh^{-(sigma + 2 shift)}(t) tanh^{tanh_power}(t).
struct MonomialKey {
  int shift = 0;
  int tanh_power = 0;
  auto operator<=>(const MonomialKey&) const = default;
};

/// Unreduced input term; tanh_power may exceed 1.
struct RawTerm {
  int shift = 0;
  int tanh_power = 0;
  Rational coeff;
};

/// Exact finite combination sum c_{m,e} cosh^{-(sigma+2m)}(t) tanh^e(t) with
/// e in {0, 1}. Zero coefficients are never stored, so two spans over the same
/// base are equal iff their term maps are equal.
class SigmaSpan {
 public:
  using TermMap = std::map<MonomialKey, Rational>;

  explicit SigmaSpan(AlgebraParams base) : base_(std::move(base)) {}

  /// E_m (tanh_power 0) or O_m (tanh_power 1) times coeff.
  static SigmaSpan monomial(const AlgebraParams& base, int shift, int tanh_power,
                            const Rational& coeff = Rational(1));

  const AlgebraParams& base() const { return base_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int shift, int tanh_power) const;
  int max_shift() const;

  /// Adds coeff * cosh^{-(sigma+2 shift)} tanh^{tanh_power}, reducing
  /// tanh^2 = 1 - cosh^{-2} until the power is 0 or 1.
  void add_term(int shift, int tanh_power, const Rational& coeff);

  SigmaSpan& operator+=(const SigmaSpan& rhs);
  SigmaSpan& operator-=(const SigmaSpan& rhs);
  SigmaSpan& operator*=(const Rational& scale);

  friend SigmaSpan operator+(SigmaSpan lhs, const SigmaSpan& rhs) { return lhs += rhs; }
  friend SigmaSpan operator-(SigmaSpan lhs, const SigmaSpan& rhs) { return lhs -= rhs; }
  friend SigmaSpan operator*(SigmaSpan lhs, const Rational& s) { return lhs *= s; }
  friend SigmaSpan operator*(const Rational& s, SigmaSpan rhs) { return rhs *= s; }
  friend bool operator==(const SigmaSpan& lhs, const SigmaSpan& rhs) {
    return lhs.base_ == rhs.base_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void accumulate(const MonomialKey& key, const Rational& coeff);
  void require_same_base(const SigmaSpan& other) const;

  AlgebraParams base_;
  TermMap terms_;
};

/// Normal form of an arbitrary list of cosh/tanh monomials.
SigmaSpan span_normalize(std::span<const RawTerm> raw_terms, const AlgebraParams& base);

/// Floating evaluation at t.
double span_evaluate(const SigmaSpan& f, double t);

/// log cosh t without overflow for large |t|.
double log_cosh(double t);

/// [{"m":..,"eps":..,"num":"..","den":".."}, ...] in key order.
nlohmann::json to_json(const SigmaSpan& f);
SigmaSpan span_from_json(const nlohmann::json& j, const AlgebraParams& base);

}  // namespace bc1
