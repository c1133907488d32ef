#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed grid text. Positions are 1-based; 0 means "whole document".
struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error(what + (line > 0 ? " (line " + std::to_string(line) +
                                     (column > 0 ? ", column " + std::to_string(column) : "") + ")"
                               : "")),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// A diagram that fails the Le-property where a valid one is required.
struct InvalidDiagram : Error {
  using Error::Error;
};

/// Subset passed to a basis query has the wrong cardinality.
struct BadCardinality : Error {
  using Error::Error;
};

/// A sink was scanned with no open source; the set cannot be a basis of
/// any positroid with the given canonical basis.
struct UnmatchedSink : Error {
  using Error::Error;
};

struct NotABasis : Error {
  using Error::Error;
};

struct NotASink : Error {
  using Error::Error;
};

struct NotDivisible : Error {
  using Error::Error;
};

/// Two distinct bases mapped to the same monomial. Signals an
/// implementation bug or a genuine counterexample; never expected.
struct InjectivityViolation : Error {
  using Error::Error;
};

/// An executable lemma failed at runtime (e.g. a passive element with no
/// containing path, or a constructive witness that does not certify).
struct LemmaViolation : Error {
  using Error::Error;
};

}  // namespace positroid
