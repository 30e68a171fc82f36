// SPDX-License-Identifier: Apache-2.0
#include "bc1/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "bc1/errors.hpp"

namespace bc1 {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_rational_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return all_digits(text);
  return all_digits(text.substr(0, slash)) && all_digits(text.substr(slash + 1));
}

Rational parse_rational(std::string_view text) {
  if (!is_rational_literal(text)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  BigInt num(std::string(text.substr(0, slash)));
  BigInt den(1);
  if (slash != std::string_view::npos) den = BigInt(std::string(text.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

double parse_real(std::string_view text) {
  if (is_rational_literal(text)) return to_double(parse_rational(text));
  std::string buf(text);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(value)) {
    throw ParseError("malformed number '" + buf + "'");
  }
  return value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace bc1
