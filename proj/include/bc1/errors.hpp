// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bc1 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the admissible domain (e.g. sigma <= iota + b).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of Gamma, of G(lambda, .) or of a c-function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A hypergeometric denominator parameter hits a non-positive integer.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Series or quadrature failed to reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, grids, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bc1
