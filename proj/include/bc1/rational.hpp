// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bc1 {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" exactly. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// True when `text` is accepted by parse_rational.
bool is_rational_literal(std::string_view text);

/// Parses a rational literal or a decimal/scientific literal to double.
double parse_real(std::string_view text);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace bc1
