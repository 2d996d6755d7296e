#pragma once

#include <stdexcept>
#include <string>

namespace wb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-typed input: domain/codomain mismatch, non-total table, unknown element.
struct TypeError : Error {
  using Error::Error;
};

/// A graded computation needed a word beyond the configured grade bound.
struct GradeError : Error {
  using Error::Error;
};

/// An operation was called without the certificate it depends on.
struct PreconditionError : Error {
  using Error::Error;
};

/// Data violates a law; what() names the law and a witness.
struct LawError : Error {
  using Error::Error;
};

/// Malformed or unresolved input documents; what() names the entry and the position.
struct InputError : Error {
  using Error::Error;
};

}  // namespace wb
