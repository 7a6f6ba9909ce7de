/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace holevo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (matrix dims, vector lengths, channel dims).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a domain invariant: non-Hermitian input, trace != 1,
/// negative eigenvalues, probabilities that do not sum to one, non-unit axes.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The eigensolver did not converge or produced non-finite output.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Operation only defined for a restricted dimension (e.g. qubit-only GAI).
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// The ensemble is degenerate for the requested operation.
class DegenerateEnsembleError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. Carries a 1-based line/column when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace holevo
