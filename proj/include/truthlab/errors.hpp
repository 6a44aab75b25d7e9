#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace truthlab {

// Base for all library errors. Callers that need to distinguish catch the
// concrete type; the CLI maps any Error to exit code 2 unless noted.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Substitution would move a free variable of the replacement under a binder.
struct CaptureError : Error {
  using Error::Error;
};

// Assignment domain differs from the formula's free variables.
struct AssignmentMismatch : Error {
  using Error::Error;
};

// A variable had no value during evaluation.
struct UnassignedVariable : Error {
  using Error::Error;
};

// The classical evaluator met the oracle predicate.
struct OracleInClassical : Error {
  using Error::Error;
};

// is_total / induction helpers require at most one free variable.
struct TooManyFreeVars : Error {
  using Error::Error;
};

// Predicate substitution requires P applied to variables only.
struct NotSemirelational : Error {
  using Error::Error;
};

// Universe closure exceeded the configured cap.
struct UniverseTooLarge : Error {
  using Error::Error;
};

// An operation consulted a sentence outside its universe.
struct NotInUniverse : Error {
  using Error::Error;
};

// Paired sequence arguments of different lengths.
struct LengthMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct EmptyList : Error {
  using Error::Error;
};

// A generated formula exceeded the node-count cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Text input rejected; line is 1-based, 0 when not line-oriented.
struct ParseError : Error {
  std::size_t line;
  std::size_t column;
  ParseError(const std::string& what, std::size_t line_ = 0, std::size_t column_ = 0)
      : Error(what), line(line_), column(column_) {}
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace truthlab
