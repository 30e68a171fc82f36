// SPDX-License-Identifier: Apache-2.0
#include "bc1/sigma_span.hpp"

#include <cmath>
#include <string>

#include "bc1/errors.hpp"

namespace bc1 {

SigmaSpan SigmaSpan::monomial(const AlgebraParams& base, int shift, int tanh_power,
                              const Rational& coeff) {
  SigmaSpan out(base);
  out.add_term(shift, tanh_power, coeff);
  return out;
}

Rational SigmaSpan::coefficient(int shift, int tanh_power) const {
  const auto it = terms_.find({shift, tanh_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

int SigmaSpan::max_shift() const {
  int top = -1;
  for (const auto& [key, c] : terms_) top = std::max(top, key.shift);
  return top;
}

void SigmaSpan::accumulate(const MonomialKey& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void SigmaSpan::add_term(int shift, int tanh_power, const Rational& coeff) {
  if (shift < 0 || tanh_power < 0) throw ParameterError("monomial indices must be non-negative");
  // tanh^{2q+e} = tanh^e (1 - cosh^{-2})^q
  const int q = tanh_power / 2;
  const int e = tanh_power % 2;
  BigInt binom = 1;
  for (int i = 0; i <= q; ++i) {
    const Rational c = (i % 2 == 0 ? coeff : Rational(-coeff)) * Rational(binom);
    accumulate({shift + i, e}, c);
    binom = binom * (q - i) / (i + 1);
  }
}

void SigmaSpan::require_same_base(const SigmaSpan& other) const {
  if (!(base_ == other.base_)) throw ParameterError("spans over different parameter bases");
}

SigmaSpan& SigmaSpan::operator+=(const SigmaSpan& rhs) {
  require_same_base(rhs);
  for (const auto& [key, c] : rhs.terms_) accumulate(key, c);
  return *this;
}

SigmaSpan& SigmaSpan::operator-=(const SigmaSpan& rhs) {
  require_same_base(rhs);
  for (const auto& [key, c] : rhs.terms_) accumulate(key, -c);
  return *this;
}

SigmaSpan& SigmaSpan::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scale;
  return *this;
}

SigmaSpan span_normalize(std::span<const RawTerm> raw_terms, const AlgebraParams& base) {
  SigmaSpan out(base);
  for (const auto& term : raw_terms) out.add_term(term.shift, term.tanh_power, term.coeff);
  return out;
}

double log_cosh(double t) {
  const double a = std::abs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

double span_evaluate(const SigmaSpan& f, double t) {
  const double sigma = to_double(f.base().sigma);
  const double lc = log_cosh(t);
  const double th = std::tanh(t);
  double sum = 0.0;
  for (const auto& [key, c] : f.terms()) {
    double v = std::exp(-(sigma + 2.0 * key.shift) * lc);
    if (key.tanh_power == 1) v *= th;
    sum += to_double(c) * v;
  }
  return sum;
}

nlohmann::json to_json(const SigmaSpan& f) {
  auto out = nlohmann::json::array();
  for (const auto& [key, c] : f.terms()) {
    out.push_back({{"m", key.shift},
                   {"eps", key.tanh_power},
                   {"num", boost::multiprecision::numerator(c).str()},
                   {"den", boost::multiprecision::denominator(c).str()}});
  }
  return out;
}

SigmaSpan span_from_json(const nlohmann::json& j, const AlgebraParams& base) {
  if (!j.is_array()) throw ParseError("SigmaSpan JSON must be an array");
  SigmaSpan out(base);
  for (const auto& item : j) {
    try {
      const int m = item.at("m").get<int>();
      const int eps = item.at("eps").get<int>();
      if (eps != 0 && eps != 1) throw ParseError("eps must be 0 or 1");
      const Rational c = parse_rational(item.at("num").get<std::string>() + "/" +
                                        item.at("den").get<std::string>());
      out.add_term(m, eps, c);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad SigmaSpan term: ") + e.what());
    }
  }
  return out;
}

}  // namespace bc1
