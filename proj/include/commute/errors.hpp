#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commute {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid construction parameters or violated operation preconditions.
struct ConstraintError : Error {
  using Error::Error;
};

// A configured size cap (group order, vertex count, field size) was exceeded.
struct CapError : Error {
  using Error::Error;
};

// Elements of two different fields were mixed in one operation.
struct FieldMismatchError : Error {
  using Error::Error;
};

// A multiplication rule failed the group axioms during validation.
struct ValidationError : Error {
  using Error::Error;
};

// The iterative eigensolver did not reach the target accuracy in budget.
struct ConvergenceError : Error {
  using Error::Error;
};

// Two independent computation routes disagreed, or a structural guarantee
// did not hold.  Indicates a bug in this library, not bad input.
struct InternalError : Error {
  using Error::Error;
};

// Group-spec text rejected by the parser; `offset` is the byte position of
// the offending token in the input.
struct ParseError : Error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& what)
      : Error("syntax error at byte " + std::to_string(off) + ": " + what),
        offset(off) {}
};

}  // namespace commute
