#pragma once

#include <stdexcept>
#include <string>

namespace fockspace {

/// Violated operation precondition (bad rank, non-dominant input, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidCartanType : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// The straightening rewrite budget ran out.
class FuelExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The canonical-basis solver met a right-hand side that cannot come from a
/// bar-invariant unitriangular element.
class InconsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A monomial map handed to the Schur expansion is not W0-invariant.
class NonInvariantError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace fockspace
