// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "bc1/rational.hpp"

namespace bc1 {

/// Dense univariate polynomial with ascending coefficients. The coefficient
/// vector is trimmed so that the leading coefficient is nonzero; the zero
/// polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  /// c0 + c1 x
  static Polynomial linear(const T& c0, const T& c1) { return Polynomial(std::vector<T>{c0, c1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  T coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : T(0); }

  /// Horner evaluation. Rational coefficients are converted to double when
  /// X is a floating type.
  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<X>(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) { return *this += rhs * T(-1); }
  Polynomial& operator*=(const T& scale) {
    for (auto& c : coeffs_) c *= scale;
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const T& scale) { return lhs *= scale; }
  friend Polynomial operator*(const T& scale, Polynomial rhs) { return rhs *= scale; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<T> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  template <class X>
  static X convert(const T& c) {
    if constexpr (std::is_same_v<T, Rational> && !std::is_same_v<X, Rational>) {
      return X(static_cast<double>(c));
    } else {
      return X(c);
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// prod_{j<m} (c0 + j + c1 x), the Pochhammer symbol (c0 + c1 x)_m as a
/// polynomial in x.
template <class T>
Polynomial<T> rising_linear(const T& c0, const T& c1, int m) {
  auto result = Polynomial<T>::constant(T(1));
  for (int j = 0; j < m; ++j) result *= Polynomial<T>::linear(c0 + T(j), c1);
  return result;
}

/// Polynomial in the Cherednik operator D with exact coefficients.
using OperatorPoly = Polynomial<Rational>;

}  // namespace bc1
